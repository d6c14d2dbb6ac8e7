"""Regenerate tests/golden: cases.json plus one .golden file per case."""

import io
import json
import pathlib
import sys


from cxlattices.cli import run

STD1 = '{"n": 1, "generators": [[[1, 0]], [[0, 1]]]}'
TAU1 = '{"n": 1, "generators": [[[1, 0]], [[0.3, 1.7]]]}'

CASES = {
    # --- map-apply ---
    "map-apply-rotation": {
        "argv": ["map-apply"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[0, 1]]], "n": [[[0, 0]]]}, "z": [[1, 0]]}',
        "exit": 0,
    },
    "map-apply-block-identity": {
        "argv": ["map-apply"],
        "input": '{"map": {"kind": "block", "e1": [[[1,0],[0,0]],[[0,0],[1,0]]], "e2": [[[0,0],[0,0]],[[0,0],[0,0]]], "e3": [[[0,0],[0,0]],[[0,0],[0,0]]], "e4": [[[1,0],[0,0]],[[0,0],[1,0]]]}, "z": [[1, 2], [3, 4]]}',
        "exit": 0,
    },
    # --- map-convert ---
    "map-convert-block-to-conjugate-pair": {
        "argv": ["map-convert", "--to", "conjugate_pair"],
        "input": '{"map": {"kind": "block", "e1": [[[2,0]]], "e2": [[[-1,0]]], "e3": [[[1,0]]], "e4": [[[3,0]]]}}',
        "exit": 0,
    },
    "map-convert-to-split-rejected": {
        "argv": ["map-convert", "--to", "split"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[2, 0]]], "n": [[[0, 0]]]}}',
        "exit": 1,
    },
    "map-convert-to-normalized": {
        "argv": ["map-convert", "--to", "normalized"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[2, 0]]], "n": [[[1, 0]]]}}',
        "exit": 0,
    },
    # --- map-invertible ---
    "map-invertible-yes": {
        "argv": ["map-invertible"],
        "input": '{"map": {"kind": "block", "e1": [[[1,0]]], "e2": [[[0,0]]], "e3": [[[0,0]]], "e4": [[[1,0]]]}}',
        "exit": 0,
    },
    "map-invertible-singular": {
        "argv": ["map-invertible"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[1, 0]]], "n": [[[1, 0]]]}}',
        "exit": 0,
    },
    "map-invertible-boundary-flag": {
        "argv": ["map-invertible", "--tol-rel", "0.001"],
        "input": '{"map": {"kind": "block", "e1": [[[1,0]]], "e2": [[[0,0]]], "e3": [[[0,0]]], "e4": [[[0.0005,0]]]}}',
        "exit": 0,
    },
    # --- map-majorizes ---
    "map-majorizes-yes": {
        "argv": ["map-majorizes"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[1, 0]]], "n": [[[0.25, 0]]]}}',
        "exit": 0,
    },
    "map-majorizes-singular-m": {
        "argv": ["map-majorizes"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[0, 0]]], "n": [[[1, 0]]]}}',
        "exit": 0,
    },
    # --- map-normalize ---
    "map-normalize-scale": {
        "argv": ["map-normalize"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[2, 0]]], "n": [[[1, 0]]]}}',
        "exit": 0,
    },
    "map-normalize-singular-m": {
        "argv": ["map-normalize"],
        "input": '{"map": {"kind": "conjugate_pair", "m": [[[0, 0]]], "n": [[[1, 0]]]}}',
        "exit": 1,
    },
    # --- polar ---
    "polar-rotation-scale": {
        "argv": ["polar"],
        "input": '{"matrix": [[[0, 2]]]}',
        "exit": 0,
    },
    "polar-singular": {
        "argv": ["polar"],
        "input": '{"matrix": [[[0, 0]]]}',
        "exit": 1,
    },
    # --- gram ---
    "gram-shear": {
        "argv": ["gram"],
        "input": '{"matrix": [[[0,0],[2,0]],[[1,0],[0,0]]]}',
        "exit": 0,
    },
    # --- unitary-equiv ---
    "unitary-equiv-yes": {
        "argv": ["unitary-equiv"],
        "input": '{"first": [[[2, 0]]], "second": [[[0, 2]]]}',
        "exit": 0,
    },
    "unitary-equiv-no": {
        "argv": ["unitary-equiv"],
        "input": '{"first": [[[1, 0]]], "second": [[[2, 0]]]}',
        "exit": 0,
    },
    # --- sl-normalize ---
    "sl-normalize-diag": {
        "argv": ["sl-normalize"],
        "input": '{"matrix": [[[0,1],[0,0]],[[0,0],[1,0]]]}',
        "exit": 0,
    },
    # --- lattice-validate ---
    "lattice-validate-tau": {
        "argv": ["lattice-validate"],
        "input": '{"lattice": ' + TAU1 + "}",
        "exit": 0,
    },
    "lattice-validate-collinear": {
        "argv": ["lattice-validate"],
        "input": '{"lattice": {"n": 1, "generators": [[[1, 0]], [[2, 0]]]}}',
        "exit": 0,
    },
    # --- lattice-covolume ---
    "lattice-covolume-standard": {
        "argv": ["lattice-covolume"],
        "input": '{"lattice": ' + STD1 + "}",
        "exit": 0,
    },
    "lattice-covolume-tau": {
        "argv": ["lattice-covolume"],
        "input": '{"lattice": ' + TAU1 + "}",
        "exit": 0,
    },
    "lattice-covolume-tolerance-echo": {
        "argv": ["lattice-covolume", "--tol-rel", "1e-06", "--tol-abs", "1e-09"],
        "input": '{"lattice": ' + STD1 + "}",
        "exit": 0,
    },
    # --- lattice-normalize ---
    "lattice-normalize-scaled-tau": {
        "argv": ["lattice-normalize"],
        "input": '{"lattice": {"n": 1, "generators": [[[2, 0]], [[0.6, 3.4]]]}}',
        "exit": 0,
    },
    # --- lattice-same ---
    "lattice-same-shear": {
        "argv": ["lattice-same"],
        "input": '{"first": ' + STD1 + ', "second": {"n": 1, "generators": [[[1, 1]], [[0, 1]]]}}',
        "exit": 0,
    },
    "lattice-same-sublattice": {
        "argv": ["lattice-same"],
        "input": '{"first": ' + STD1 + ', "second": {"n": 1, "generators": [[[2, 0]], [[0, 1]]]}}',
        "exit": 0,
    },
    "lattice-same-ambiguous": {
        "argv": ["lattice-same"],
        "input": '{"first": ' + STD1 + ', "second": {"n": 1, "generators": [[[1.000000000003, 0]], [[0, 1]]]}}',
        "exit": 1,
    },
    # --- lattice-equiv ---
    "lattice-equiv-refuted-covolume": {
        "argv": ["lattice-equiv"],
        "input": '{"first": [[[1, 0]]], "second": [[[2, 0]]]}',
        "exit": 0,
    },
    "lattice-equiv-equivalent-rotation": {
        "argv": ["lattice-equiv"],
        "input": '{"first": [[[1, 0]]], "second": [[[0, 1]]]}',
        "exit": 0,
    },
    "lattice-equiv-undecided-height": {
        "argv": ["lattice-equiv"],
        "input": '{"first": [[[1,0],[0,0]],[[0,0],[1,0]]], "second": [[[1,0],[3,0]],[[0,0],[1,0]]]}',
        "exit": 0,
    },
    "lattice-equiv-spectrum-refuted": {
        "argv": ["lattice-equiv"],
        "input": '{"first": [[[1,0],[0,0]],[[0,0],[1,0]]], "second": [[[0.5,0],[0,0]],[[0,0],[2,0]]]}',
        "exit": 0,
    },
    "lattice-equiv-su-rejected": {
        "argv": ["lattice-equiv", "--mode", "special_unitary"],
        "input": '{"first": [[[2, 0]]], "second": [[[2, 0]]]}',
        "exit": 1,
    },
    # --- sigma-check ---
    "sigma-check-member": {
        "argv": ["sigma-check"],
        "input": '{"matrix": [[[1,0],[0,1]],[[0,0],[1,0]]]}',
        "exit": 0,
    },
    "sigma-check-determinant": {
        "argv": ["sigma-check"],
        "input": '{"matrix": [[[0, 1]]]}',
        "exit": 1,
    },
    "sigma-check-nonintegral": {
        "argv": ["sigma-check"],
        "input": '{"matrix": [[[0.5, 0]]]}',
        "exit": 1,
    },
    # --- torus-reduce / torus-add ---
    "torus-reduce-standard": {
        "argv": ["torus-reduce"],
        "input": '{"lattice": ' + STD1 + ', "z": [[2.5, 3.25]]}',
        "exit": 0,
    },
    "torus-reduce-dimension-mismatch": {
        "argv": ["torus-reduce"],
        "input": '{"lattice": ' + STD1 + ', "z": [[1, 0], [0, 1]]}',
        "exit": 1,
    },
    "torus-add-wrap": {
        "argv": ["torus-add"],
        "input": '{"lattice": ' + STD1 + ', "first": [[0.75, 0]], "second": [[0.75, 0.5]]}',
        "exit": 0,
    },
    # --- dim1-forms ---
    "dim1-forms-basic": {
        "argv": ["dim1-forms"],
        "input": '{"a": [1, 0], "b": [2, 0]}',
        "exit": 0,
    },
    "dim1-forms-noninvertible": {
        "argv": ["dim1-forms"],
        "input": '{"a": [1, 0], "b": [0, 1]}',
        "exit": 0,
    },
    "dim1-forms-zero-a": {
        "argv": ["dim1-forms"],
        "input": '{"a": [0, 0], "b": [1, 0]}',
        "exit": 0,
    },
    # --- malformed input (exit 2) ---
    "malformed-not-json": {
        "argv": ["gram"],
        "input": "Ceci n'est pas du JSON",
        "exit": 2,
    },
    "malformed-missing-field": {
        "argv": ["gram"],
        "input": "{}",
        "exit": 2,
    },
    "malformed-extra-field": {
        "argv": ["gram"],
        "input": '{"matrix": [[[1, 0]]], "extra": 1}',
        "exit": 2,
    },
    "malformed-bad-complex": {
        "argv": ["gram"],
        "input": '{"matrix": [[[1]]]}',
        "exit": 2,
    },
    "malformed-nonfinite": {
        "argv": ["gram"],
        "input": '{"matrix": [[[Infinity, 0]]]}',
        "exit": 2,
    },
    "malformed-unknown-subcommand": {
        "argv": ["frobnicate"],
        "input": "",
        "exit": 2,
    },
    "malformed-unknown-flag": {
        "argv": ["gram", "--frobnicate"],
        "input": '{"matrix": [[[1, 0]]]}',
        "exit": 2,
    },
}


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parent
    out_dir.mkdir(parents=True, exist_ok=True)
    failures = []
    for name, case in CASES.items():
        buf = io.StringIO()
        code = run(case["argv"], io.StringIO(case["input"]), buf)
        if code != case["exit"]:
            failures.append(f"{name}: expected exit {case['exit']}, got {code}")
            continue
        (out_dir / f"{name}.golden").write_text(buf.getvalue(), encoding="utf-8")
    (out_dir / "cases.json").write_text(
        json.dumps(CASES, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
    if failures:
        sys.exit("\n".join(failures))
    print(f"wrote {len(CASES)} cases")


if __name__ == "__main__":
    main()
