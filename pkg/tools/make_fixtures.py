"""Regenerate the shipped ``.tsys.json`` fixtures from their constructions.

    python tools/make_fixtures.py [--check]
"""
import argparse
import sys
from pathlib import Path

from tilecoh.rule_format import parse_system, serialize_system, systems_equal
from tilecoh.rule_format.builders import BUILDERS

OUT = Path(__file__).resolve().parents[1] / "src" / "tilecoh" / "fixtures"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="fail if a shipped fixture is stale")
    args = ap.parse_args(argv)
    stale = []
    for name, build in BUILDERS.items():
        data = serialize_system(build())
        assert systems_equal(parse_system(data), build()), name
        path = OUT / f"{name}.tsys.json"
        if args.check:
            if not path.exists() or path.read_bytes() != data:
                stale.append(name)
        else:
            path.write_bytes(data)
            print(f"wrote {path.name} ({len(data)} bytes)")
    if stale:
        print("stale fixtures:", ", ".join(stale), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
