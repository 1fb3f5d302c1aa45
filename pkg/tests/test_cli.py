"""Command-line interface: commands, exit codes, output formats."""

import json

import pytest

from flowcat import datasets
from flowcat.cli import main
from flowcat.ffc_io import decode, encode
from flowcat.model import validate
from flowcat.moves import Move, apply_move, list_moves


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------


def test_validate_dataset_ok(capsys):
    code, out, err = run(capsys, "validate", "torus_3_4_q11")
    assert code == 0
    assert out == "ok\n"
    assert err == ""


def test_validate_accepts_file_path(capsys, tmp_path):
    path = tmp_path / "t.ffc"
    path.write_text(datasets.read_text("trefoil_q7"), encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0 and out == "ok\n"


def test_validate_reports_errors(capsys, tmp_path):
    cat = datasets.load("trefoil_q7")
    del cat.objects["v0"]
    path = tmp_path / "broken.ffc"
    # encode() would re-check nothing; write the raw JSON of the mutilated
    # category via its jsonable form.
    path.write_text(encode(cat), encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_color_markers(capsys, monkeypatch):
    monkeypatch.setenv("FFC_COLOR", "1")
    code, out, _ = run(capsys, "validate", "trefoil_q7")
    assert code == 0
    assert out == "\x1b[32mok\x1b[0m\n"
    code, _, err = run(capsys, "moves", "no_such_dataset")
    assert code == 1
    assert err.startswith("\x1b[31merror:\x1b[0m ")


def test_unknown_input_fails(capsys):
    code, out, err = run(capsys, "homology", "no_such_dataset")
    assert code == 1
    assert "neither a file nor a bundled dataset" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["homology", "trefoil_q7", "--coeff", "Q"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# moves / apply
# ---------------------------------------------------------------------------


def test_moves_lists_specs_in_engine_order(capsys):
    code, out, _ = run(capsys, "moves", "torus_3_4_q11")
    assert code == 0
    expected = [m.to_spec() for m in list_moves(datasets.load("torus_3_4_q11"))]
    assert out.splitlines() == expected


def test_apply_writes_engine_result(capsys, tmp_path):
    out_path = tmp_path / "after.ffc"
    code, out, _ = run(
        capsys,
        "apply",
        "torus_3_4_q11",
        "whitney:a25,a11:P,M",
        "-o",
        str(out_path),
    )
    assert code == 0 and out == ""
    expected = apply_move(
        datasets.load("torus_3_4_q11"), Move.from_spec("whitney:a25,a11:P,M")
    )
    assert out_path.read_text(encoding="utf-8") == encode(expected)


def test_apply_stdout_and_bad_move(capsys):
    code, out, _ = run(capsys, "apply", "two_trefoils_aux", "cancel:tau,sigma:p")
    assert code == 0
    cat = decode(out)
    assert sorted(cat.objects) == ["alpha", "beta1", "beta2", "gamma"]

    code, _, err = run(capsys, "apply", "trefoil_q7", "cancel:v1,v0")
    assert code == 1
    assert "error:" in err

    code, _, err = run(capsys, "apply", "trefoil_q7", "frobnicate:hi")
    assert code == 1
    assert "error:" in err


# ---------------------------------------------------------------------------
# simplify / recognize / homology
# ---------------------------------------------------------------------------


def test_simplify_torus_output(capsys, tmp_path):
    final_path = tmp_path / "final.ffc"
    code, out, _ = run(
        capsys, "simplify", "torus_3_4_q11", "-o", str(final_path)
    )
    assert code == 0
    lines = out.splitlines()
    applied = [l for l in lines if l.startswith("applied: ")]
    assert applied, "simplify should report each applied move"
    assert "result: RP5/RP2@2" in lines
    assert "note: RP5/RP2@2 = Susp(-1) RP5/RP2" in lines
    # The printed note names the suspension explicitly.
    assert any("Susp(-1) RP5/RP2" in l for l in lines)

    code, out, _ = run(capsys, "recognize", str(final_path))
    assert code == 0
    assert out.splitlines() == [
        "RP5/RP2@2",
        "note: RP5/RP2@2 = Susp(-1) RP5/RP2",
    ]


def test_recognize_trefoil(capsys):
    code, out, _ = run(capsys, "recognize", "trefoil_q7")
    assert code == 0
    assert out == "Moore(Z/2,2)\n"


def test_homology_pretzel(capsys):
    code, out, _ = run(capsys, "homology", "pretzel_m2_2_2_q-6")
    assert code == 0
    assert out.splitlines() == ["H^0 = Z", "H^1 = 0", "H^2 = Z^3"]


def test_homology_mod2(capsys):
    code, out, _ = run(capsys, "homology", "trefoil_q7", "--coeff", "Z2")
    assert code == 0
    assert out.splitlines() == ["H^2 = Z/2", "H^3 = Z/2"]


def test_homology_rejects_invalid_category(capsys, tmp_path):
    cat = datasets.load("two_trefoils_q14")
    cat.moduli0[("beta1", "alpha")]["p0"] ^= 1  # breaks the end-sign rule
    assert validate(cat) != []
    path = tmp_path / "bad.ffc"
    path.write_text(encode(cat), encoding="utf-8")
    code, _, err = run(capsys, "homology", str(path))
    assert code == 1
    assert "category is invalid" in err


# ---------------------------------------------------------------------------
# trace round trip through the CLI
# ---------------------------------------------------------------------------


def test_simplify_trace_replays_byte_exactly(capsys, tmp_path):
    trace_path = tmp_path / "trace.json"
    final_path = tmp_path / "final.ffc"
    code, _, _ = run(
        capsys,
        "simplify",
        "pretzel_m2_2_2_q-6",
        "-o",
        str(final_path),
        "--trace",
        str(trace_path),
    )
    assert code == 0
    trace = json.loads(trace_path.read_text(encoding="utf-8"))
    assert trace["moves"], "greedy run on the pretzel applies moves"

    # Replay: write the starting category, then apply each traced move via
    # the CLI, feeding each output back in.
    current = tmp_path / "step-0.ffc"
    current.write_text(datasets.read_text("pretzel_m2_2_2_q-6"), encoding="utf-8")
    for i, step in enumerate(trace["moves"], start=1):
        next_path = tmp_path / f"step-{i}.ffc"
        spec = Move.from_dict(step).to_spec()
        code, _, err = run(capsys, "apply", str(current), spec, "-o", str(next_path))
        assert code == 0, (spec, err)
        current = next_path

    assert current.read_bytes() == final_path.read_bytes()


# ---------------------------------------------------------------------------
# split
# ---------------------------------------------------------------------------


def test_split_lists_components(capsys):
    code, out, _ = run(capsys, "split", "two_trefoils_q14")
    assert code == 0
    assert out.splitlines() == ["alpha,beta1,beta2,gamma", "out1", "out2"]


def test_split_writes_summand_files(capsys, tmp_path):
    outdir = tmp_path / "parts"
    code, out, _ = run(capsys, "split", "two_trefoils_q14", "-o", str(outdir))
    assert code == 0
    paths = out.splitlines()
    assert [p.rsplit("/", 1)[-1] for p in paths] == [
        "summand-1.ffc",
        "summand-2.ffc",
        "summand-3.ffc",
    ]
    first = decode((outdir / "summand-1.ffc").read_text(encoding="utf-8"))
    assert sorted(first.objects) == ["alpha", "beta1", "beta2", "gamma"]
    for path in paths:
        cat = decode(open(path, encoding="utf-8").read())
        assert validate(cat) == []
