"""Command-line surface for abaplus."""
