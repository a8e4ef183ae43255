"""Smoke test for the cycnc Python extension.

Build first:
    cargo build -p cycnc-py --release --features extension-module
Then run:
    python3 python/smoke_test.py
"""

import importlib.machinery
import importlib.util
import json
import pathlib
import sys


def load():
    try:
        import cycnc
        return cycnc
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        for name in ("libcycnc.so", "libcycnc.dylib", "cycnc.dll"):
            path = root / "target" / profile / name
            if path.exists():
                loader = importlib.machinery.ExtensionFileLoader("cycnc", str(path))
                spec = importlib.util.spec_from_file_location("cycnc", path, loader=loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                return module
    sys.exit("cycnc extension not found; build it with cargo first")


def main():
    cycnc = load()

    z = cycnc.Cyclotomic.zeta(3, 1)
    one = cycnc.Cyclotomic("1", 3)
    assert z * z * z == one
    assert (z * z + z + one).is_zero()
    print("zeta_3 inverse:", z.inv())

    jackson = cycnc.Presentation.jackson(3, 1, "1")
    assert jackson.is_confluent()
    print("Hilbert series:", jackson.hilbert_series(4))

    kw = cycnc.Presentation.kummer_witt(4, 1)
    print("unresolved overlaps for n=4:", len(kw.unresolved_overlaps()))

    m = cycnc.Representation.torsion(3, 3, 1, "1", "2")
    assert m.verify()
    print("central character:", m.central_character())
    print("ext1 (dim, inner, hom):", cycnc.ext1(m, m))

    code, out = cycnc.run_cli(["centre", "--family", "jackson", "--n", "3", "--r", "1", "--x", "1"])
    report = json.loads(out)
    print("centre report exit code:", code, "schema:", report["schema"])

    print("smoke test passed")


if __name__ == "__main__":
    main()
