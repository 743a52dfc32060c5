#!/usr/bin/env python3
"""Check a release tag against pyproject.toml and abaplus.__version__."""

from __future__ import annotations

import argparse
import re
from pathlib import Path

PROJECT_VERSION_RE = re.compile(r'^\s*version\s*=\s*"([^"]+)"', re.MULTILINE)
PACKAGE_VERSION_RE = re.compile(r"^__version__\s*=\s*['\"]([^'\"]+)['\"]", re.MULTILINE)


def read_version(path: Path, pattern: re.Pattern, label: str) -> str:
    match = pattern.search(path.read_text(encoding="utf-8"))
    if not match:
        raise ValueError(f"no {label} in {path}")
    return match.group(1)


def validate_release_tag(tag: str, pyproject_path: Path, package_init: Path) -> int:
    if not tag.startswith("v"):
        print(f"[FAIL] tag must look like vX.Y.Z: {tag}")
        return 1

    try:
        versions = {
            str(pyproject_path): read_version(pyproject_path, PROJECT_VERSION_RE, "[project].version"),
            str(package_init): read_version(package_init, PACKAGE_VERSION_RE, "__version__"),
        }
    except (OSError, ValueError) as exc:
        print(f"[FAIL] {exc}")
        return 1

    expected = tag[1:]
    for source, version in versions.items():
        if version != expected:
            print(f"[FAIL] tag {tag} does not match {source} ({version})")
            return 1

    print(f"[OK] {tag} matches pyproject.toml and the package version.")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description="Check a release tag against the project versions.")
    parser.add_argument("--tag", required=True, help="release tag, vX.Y.Z")
    parser.add_argument("--pyproject", default="pyproject.toml")
    parser.add_argument("--package-init", default="abaplus/__init__.py")
    args = parser.parse_args()
    return validate_release_tag(args.tag, Path(args.pyproject), Path(args.package_init))


if __name__ == "__main__":
    raise SystemExit(main())
