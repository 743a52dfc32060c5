#!/usr/bin/env python3
"""Run repository quality checks.

Checks included:
- UTF-8 validation on source/docs/config/sample files
- Python bytecode compilation for the package and tools
- Version consistency between pyproject.toml and abaplus.__version__
- Every shipped sample parses (``abaplus check`` / ``abaplus translate-paf``)
- Unit tests in tests/
"""

from __future__ import annotations

import argparse
import compileall
import subprocess
import sys
from pathlib import Path

from check_release_tag import PACKAGE_VERSION_RE, PROJECT_VERSION_RE, read_version

TEXT_EXTENSIONS = {".py", ".md", ".toml", ".txt", ".json", ".aba", ".paf"}

DEFAULT_SCAN_PATHS = [
    "abaplus",
    "tests",
    "tools",
    "samples",
    "README.md",
    "ARCHITECTURE.md",
    "CHANGELOG.md",
    "CONTRIBUTING.md",
    "DESIGN.md",
    "pyproject.toml",
]

COMPILE_PATHS = ["abaplus", "tools"]


def _iter_text_files(paths: list[str]) -> list[Path]:
    files: set[Path] = set()
    for raw_path in paths:
        path = Path(raw_path)
        if path.is_file():
            candidates = [path]
        elif path.is_dir():
            candidates = [child for child in path.rglob("*") if child.is_file()]
        else:
            continue
        files.update(child for child in candidates if child.suffix.lower() in TEXT_EXTENSIONS)
    return sorted(files)


def check_utf8(paths: list[str]) -> int:
    """Validate UTF-8 decoding for known text files."""
    bad_files: list[str] = []
    for file_path in _iter_text_files(paths):
        try:
            file_path.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            bad_files.append(f"{file_path}: {exc}")

    if bad_files:
        print("[FAIL] UTF-8 validation failed:")
        for line in bad_files:
            print(f"  - {line}")
        return 1

    print("[OK] UTF-8 validation passed.")
    return 0


def check_compile(paths: list[str]) -> int:
    """Compile Python files to bytecode to catch syntax errors."""
    ok = all(compileall.compile_dir(path, quiet=1) for path in paths if Path(path).exists())
    print("[OK] compileall passed." if ok else "[FAIL] compileall failed.")
    return 0 if ok else 1


def check_version_sync() -> int:
    try:
        project = read_version(Path("pyproject.toml"), PROJECT_VERSION_RE, "[project].version")
        package = read_version(Path("abaplus/__init__.py"), PACKAGE_VERSION_RE, "__version__")
    except (OSError, ValueError) as exc:
        print(f"[FAIL] version sync check: {exc}")
        return 1

    if project != package:
        print(f"[FAIL] version sync mismatch: pyproject.toml={project} vs abaplus/__init__.py={package}")
        return 1

    print(f"[OK] version sync passed ({project}).")
    return 0


def check_samples(samples_dir: str = "samples") -> int:
    """Parse every sample through the CLI; any non-zero exit fails the check."""
    failures = []
    for path in sorted(Path(samples_dir).glob("*")):
        if path.suffix == ".aba":
            subcommand = "check"
        elif path.suffix == ".paf":
            subcommand = "translate-paf"
        else:
            continue
        cmd = [sys.executable, "-m", "abaplus", subcommand, str(path)]
        result = subprocess.run(cmd, check=False, capture_output=True, text=True)
        if result.returncode != 0:
            failures.append(f"{path}: {result.stderr.strip()}")

    if failures:
        print("[FAIL] sample check failed:")
        for line in failures:
            print(f"  - {line}")
        return 1

    print("[OK] samples parse.")
    return 0


def check_tests() -> int:
    cmd = [sys.executable, "-m", "unittest", "discover", "-s", "tests", "-v"]
    result = subprocess.run(cmd, check=False)
    if result.returncode == 0:
        print("[OK] unit tests passed.")
        return 0

    print("[FAIL] unit tests failed.")
    return result.returncode


def main() -> int:
    parser = argparse.ArgumentParser(description="Run abaplus quality checks.")
    parser.add_argument("--skip-encoding", action="store_true", help="Skip UTF-8 validation.")
    parser.add_argument("--skip-compile", action="store_true", help="Skip compileall check.")
    parser.add_argument("--skip-version-sync", action="store_true", help="Skip version consistency check.")
    parser.add_argument("--skip-samples", action="store_true", help="Skip sample parsing.")
    parser.add_argument("--skip-tests", action="store_true", help="Skip unit tests.")
    args = parser.parse_args()

    exit_code = 0
    if not args.skip_encoding:
        exit_code |= check_utf8(DEFAULT_SCAN_PATHS)
    if not args.skip_compile:
        exit_code |= check_compile(COMPILE_PATHS)
    if not args.skip_version_sync:
        exit_code |= check_version_sync()
    if not args.skip_samples:
        exit_code |= check_samples()
    if not args.skip_tests:
        exit_code |= check_tests()

    print("[OK] all quality checks passed." if exit_code == 0 else "[FAIL] one or more quality checks failed.")
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())
