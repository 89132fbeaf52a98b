"""End-to-end walkthrough of the `gpi` command line.

Writes a few problem files in the text format, runs every subcommand
against them, and verifies the emitted certificates.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

FILES = {
    "identity.gpi": """\
group: Z3
vars: x1:1 x2:2 x3:1
poly: x1*x2*x3 - x3*x2*x1
m: x1*x2*x3
n: x3*x2*x1
""",
    "generator.gpi": """\
group: Z3
vars: x1:1 x2:1 x3:0 x4:1 x5:0 x6:2
type: 2
h1: x1*x2*x5*x3
h2: x4
h3: x6
""",
}


def gpi(*args):
    proc = subprocess.run([sys.executable, "-m", "gpi.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout


with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    for name, text in FILES.items():
        (root / name).write_text(text)
    ident = str(root / "identity.gpi")
    gen = str(root / "generator.gpi")

    code, out = gpi("check", ident)
    print("check:", out.strip(), f"(exit {code})")

    code, out = gpi("eval", ident, "--word", "x1*x2")
    print("eval x1*x2:", len(json.loads(out)["entries"]), "nonzero entries")

    code, out = gpi("congruent", ident)
    chain = root / "chain.json"
    chain.write_text(out)
    print("congruent: chain with",
          len(json.loads(out)["payload"]["moves"]), "move(s)")

    code, out = gpi("express", ident)
    comb = root / "comb.json"
    comb.write_text(out)
    print("express:", len(json.loads(out)["payload"]["terms"]), "term(s)")

    code, out = gpi("z3reduce", gen)
    red = root / "red.json"
    red.write_text(out)
    print("z3reduce: certificate written")

    for cert in (chain, comb, red):
        code, out = gpi("verify", str(cert))
        print(f"verify {cert.name}:", out.strip(), f"(exit {code})")

    manifest = root / "manifest.json"
    manifest.write_text(json.dumps([
        {"file": "identity.gpi", "expected": "identity"},
        {"file": "identity.gpi", "expected": "congruent"},
        {"file": "generator.gpi", "expected": "reducible"},
    ]))
    code, out = gpi("corpus", str(manifest))
    doc = json.loads(out)
    print(f"corpus: {doc['total']} entries, {doc['failures']} failures"
          f" (exit {code})")
