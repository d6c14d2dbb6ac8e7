"""The one-variable theory in closed form, and the same answers over the CLI.

For T(z) = a z + b conj(z) everything is elementary: with alpha = (a+b)/2
and beta = (a-b)/2 the map is alpha z + beta conj(z), it is invertible
iff |alpha| != |beta|, and when the linear part wins it rewrites as
theta (z + mu conj(z)) with |mu| < 1.  The scalar arithmetic is checked
against the generic matrix route on every call.

The cxlat command line exposes the same operations on one-line JSON;
this script drives it in process and prints the exact bytes a shell
pipeline would see.

Run: python3 demos/07_scalar_maps_and_cli.py
"""

import io
import json

from cxlattices import evaluate, from_ab, is_invertible_1d, to_thetamu, MajorizationFails
from cxlattices.cli import run

# ------------------------------------------------------------ scalar side
f = from_ab(1.0, 2.0)
print(f"a=1, b=2: alpha={f.alpha}, beta={f.beta}, c=b/a={f.c}")
print(f"  invertible: {is_invertible_1d(f)} (|alpha| = {abs(f.alpha)} vs |beta| = {abs(f.beta)})")
theta, mu = to_thetamu(f)
print(f"  theta={theta}, mu={mu}; theta*(1+mu) = {theta * (1 + mu)} recovers a")
assert abs(theta * (1 + mu) - f.a) < 1e-12
z = 0.3 - 1.7j
assert abs(evaluate(f, z) - theta * (z + mu * z.conjugate())) < 1e-12
print(f"  theta (z + mu conj z) reproduces a z + b conj(z) at z = {z}")
print()

# |alpha| = |beta| is the degenerate wall: T(z) = z + conj(z) kills the
# imaginary axis, so inversion and the theta/mu form both refuse.
g = from_ab(1.0, 1j)
print(f"a=1, b=i: |alpha| = |beta| = {abs(g.alpha):.6f}, invertible: {is_invertible_1d(g)}")
try:
    to_thetamu(g)
except MajorizationFails as exc:
    print(f"  to_thetamu raises MajorizationFails: {exc}")
print()

# ----------------------------------------------------------- CLI mirror
def cli(argv, payload=None):
    out = io.StringIO()
    stdin = io.StringIO(json.dumps(payload)) if payload is not None else None
    code = run(argv, stdin=stdin, stdout=out)
    return code, out.getvalue()


code, text = cli(["dim1-forms"], {"a": [1.0, 0.0], "b": [2.0, 0.0]})
print(f"cxlat dim1-forms <<< '{{\"a\": [1,0], \"b\": [2,0]}}'  (exit {code})")
print(f"  {text}", end="")
reply = json.loads(text)
assert reply["status"] == "ok"
assert reply["payload"]["mu"] == [-0.33333333333333331, 0.0]
print()

# Domain failures come back as structured errors with exit code 1 and the
# exception name from the library; malformed input exits 2.
code, text = cli(
    ["map-normalize"], {"map": {"kind": "conjugate_pair", "m": [[[0, 0]]], "n": [[[1, 0]]]}}
)
print(f"singular M over the CLI (exit {code}): {text}", end="")
assert code == 1 and json.loads(text)["error"]["name"] == "SingularM"

code, text = cli(["dim1-forms"], {"a": [1.0, 0.0]})
print(f"missing field        (exit {code}): {text}", end="")
assert code == 2
print()

# Every command echoes the tolerances it ran with, so a logged line is
# reproducible on its own.
code, text = cli(
    ["map-invertible", "--tol-rel", "1e-3"],
    {
        "map": {
            "kind": "block",
            "e1": [[[1, 0]]],
            "e2": [[[0, 0]]],
            "e3": [[[0, 0]]],
            "e4": [[[0.0001, 0]]],
        }
    },
)
reply = json.loads(text)
print(f"near-singular map at --tol-rel 1e-3: verdict {reply['payload']['invertible']}")
print(f"  diagnostics: {reply['diagnostics']}")
assert reply["payload"]["invertible"] is False
