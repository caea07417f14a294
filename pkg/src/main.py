import sys
from typing import List, Optional

from pydantic import ValidationError


def main(argv: Optional[List[str]] = None) -> int:
    """Command-line entry point; settings errors are reported before any command runs."""
    try:
        from src.cli.commands import dispatch
    except ValidationError as e:
        sys.stderr.write(f"error: invalid settings: {e}\n")
        return 4 if "ROD_FLAT_PRECISION" in str(e) else 1
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
