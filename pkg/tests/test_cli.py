from pathlib import Path

import pytest

from qk.cli import main
from qk.quantfile import load_quant, parse_quant, write_quant

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"

Q4 = str(DATA / "q4.quant")
L3 = str(DATA / "l3.quant")
NONDEC = str(DATA / "nondec.quant")
HOM = str(DATA / "q4_to_c2.hom")
BAD_HOM = str(DATA / "q4_to_c2_bad.hom")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "name,argv",
    [
        ("check_q4.txt", ["check", Q4]),
        ("ideals_l3.txt", ["ideals", L3]),
        ("classify_l3_0.txt", ["classify", L3, "--below", "0"]),
        ("spectrum_q4.txt", ["spectrum", Q4]),
        ("radical_l3_0.txt", ["radical", L3, "--below", "0", "--algorithm", "all"]),
        ("decompose_q4_bot.txt", ["decompose", Q4, "--below", "bot"]),
        ("verify_q4_axioms.txt", ["verify", Q4, "--suite", "axioms"]),
        ("hom_check_q4.txt", ["hom", "check", HOM]),
        ("gen_powerset2.txt", ["gen", "powerset:2"]),
    ],
)
def test_golden_outputs(capsys, name, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0
    assert err == ""
    assert out == golden(name)


def test_outputs_are_reproducible(capsys):
    first = run(capsys, "verify", Q4, "--suite", "lemma_bip")
    second = run(capsys, "verify", Q4, "--suite", "lemma_bip")
    assert first == second


def test_gen_roundtrip_bytes(capsys, tmp_path):
    out_file = tmp_path / "x.quant"
    for spec in ("powerset:3", "lukasiewicz:4", "m3", "lowersets:chain3"):
        code, out, _ = run(capsys, "gen", spec)
        assert code == 0
        q = parse_quant(out)
        assert write_quant(q) == out
        code, _, _ = run(capsys, "gen", spec, "-o", str(out_file))
        assert code == 0
        assert out_file.read_text(encoding="utf-8") == out


def test_gen_ideal_quantale_of_file(capsys):
    code, out, _ = run(capsys, "gen", f"ideal_quantale:{Q4}")
    assert code == 0
    assert "↓a" in out


def test_classify_by_generator_list(capsys):
    code, out, _ = run(capsys, "classify", Q4, "--ideal", "a,b")
    assert code == 0
    assert "ideal\t↓top" in out
    assert "proper\tfalse" in out


def test_table_format(capsys):
    code, out, _ = run(capsys, "check", Q4, "--format", "table")
    assert code == 0
    assert "\t" not in out
    assert "status" in out


def test_verify_seed_flag(capsys):
    code, out, _ = run(capsys, "verify", L3, "--suite", "axioms", "--seed", "9")
    assert code == 0
    assert "seed\t9" in out


def test_verify_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", L3, "--suite", "axioms", "--timing")
    assert code == 0
    assert "elapsed.axioms" in out


def test_qk_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("QK_SEED", "271")
    code, out, _ = run(capsys, "verify", L3, "--suite", "axioms")
    assert code == 0
    assert "seed\t271" in out


def test_verify_all_green(capsys):
    code, out, _ = run(capsys, "verify", L3)
    assert code == 0
    assert "failed\t0" in out
    assert "skipped\t0" in out


def test_verify_with_hom(capsys):
    code, out, _ = run(capsys, "verify", Q4, "--suite", "cep", "--hom", HOM)
    assert code == 0
    assert "failed\t0" in out


def test_verify_hom_source_mismatch(capsys):
    code, _, err = run(capsys, "verify", L3, "--suite", "cep", "--hom", HOM)
    assert code == 1
    assert "does not match" in err


def test_exit_code_failed_axioms(capsys, tmp_path):
    bad = tmp_path / "bad.quant"
    bad.write_text(
        "quantale y\nelements: 0 1 2\norder:\n  0 <= 1\n  1 <= 2\n"
        "mul:\n  0: 0 0 0\n  1: 0 0 1\n  2: 0 2 2\nend\n"
    )
    code, out, _ = run(capsys, "check", str(bad))
    assert code == 1
    assert "status\tfail" in out
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "failed\t0" not in out


def test_exit_code_invalid_hom(capsys):
    code, out, _ = run(capsys, "hom", "check", BAD_HOM)
    assert code == 1
    assert "valid\tfalse" in out
    assert "violates\tmeet" in out
    assert "witness\ta b" in out


def test_exit_code_domain_errors(capsys):
    # no primary decomposition exists for this ideal
    code, _, err = run(capsys, "decompose", NONDEC, "--below", "0")
    assert code == 1
    assert err != ""
    # the whole ideal cannot be decomposed either: properness fails
    code, _, err = run(capsys, "decompose", L3, "--below", "2")
    assert code == 1


def test_exit_code_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "missing.quant"))
    assert code == 2
    broken = tmp_path / "broken.quant"
    broken.write_text("quantale x\nelements: a\norder:\nmul:\n  a: b\nend\n")
    code, _, err = run(capsys, "check", str(broken))
    assert code == 2
    assert "line 5" in err
    code, _, _ = run(capsys, "classify", Q4, "--below", "zzz")
    assert code == 2
    code, _, _ = run(capsys, "gen", "nope:1")
    assert code == 2
    code, _, _ = run(capsys, "radical", L3)  # neither --below nor --ideal
    assert code == 2
    code, _, _ = run(capsys)  # no subcommand
    assert code == 2


def test_gen_output_matches_generator(capsys):
    code, out, _ = run(capsys, "gen", "lukasiewicz:3")
    assert code == 0
    from qk.generators import lukasiewicz_quantale

    assert parse_quant(out).same_structure(lukasiewicz_quantale(3))
