import pytest

from wreath_growth import AssociativityError, ConfigError, RunConfig

BASE = """
[field]
kind = "gf"
modulus = 2

[algebra]
kind = "polynomial"
variables = ["x"]

[sequence]
entries = { 1 = "x" }
"""


def test_reference_instance_builds():
    cfg = RunConfig.from_text(BASE)
    alg = cfg.algebra()
    seq = cfg.sequence(alg)
    assert seq.items() == [(1, alg.gen("x"))]
    assert cfg.mode == "exact" and cfg.seed == 0


def test_syntax_error_has_position():
    with pytest.raises(ConfigError) as err:
        RunConfig.from_text('[field]\nkind = "gf"\nmodulus = \n')
    assert (err.value.line, err.value.column) == (3, 11)


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="unknown key"):
        RunConfig.from_text(BASE + "\n[growth]\nhorizon = 3\nspeed = 9\n")


def test_zero_horizon_rejected():
    with pytest.raises(ConfigError):
        RunConfig.from_text(BASE + "\n[growth]\nhorizon = 0\n")


def test_domain_flag_refused_for_tables():
    text = """
[algebra]
kind = "structure_constants"
table = [["e0"]]
[flags]
is_domain = true
"""
    with pytest.raises(ConfigError, match="is_domain"):
        RunConfig.from_text(text).algebra()


def test_table_entries_and_associativity():
    good = RunConfig.from_text("""
[field]
kind = "rationals"
[algebra]
kind = "structure_constants"
names = ["u", "e"]
table = [["u", "e"], ["e", "0"]]
""").algebra()
    assert good.parse("e") * good.parse("e") == good.zero()
    bad = RunConfig.from_text("""
[algebra]
kind = "structure_constants"
table = [["e1", "e0"], ["e0", "e0"]]
""")
    with pytest.raises(AssociativityError):
        bad.algebra()


def test_rule_sequence():
    cfg = RunConfig.from_text(BASE.replace('entries = { 1 = "x" }', """
positions = { family = "triangular" }
elements = { family = "power_of", base = "x" }
horizon = 30
gap_mode = true"""))
    alg = cfg.algebra()
    seq = cfg.sequence(alg)
    assert seq.support() == [1, 3, 6, 10, 15, 21, 28]
    assert seq.entry(10) == alg.parse("x^4")


def test_mixed_sequence_forms_rejected():
    with pytest.raises(ConfigError):
        RunConfig.from_text(BASE.replace('entries = { 1 = "x" }', """
entries = { 1 = "x" }
horizon = 10""")).sequence(None)


def test_bad_element_is_config_error():
    cfg = RunConfig.from_text(BASE.replace('"x" }', '"z" }'))
    with pytest.raises(ConfigError):
        cfg.sequence(cfg.algebra())


def test_overrides_change_digest():
    cfg = RunConfig.from_text(BASE)
    assert cfg.with_overrides(seed=1).digest() != cfg.with_overrides(seed=2).digest()
    assert cfg.with_overrides(seed=1).digest() == cfg.with_overrides(seed=1).digest()


def test_free_monoid_without_cap():
    cfg = RunConfig.from_text('[semigroup]\nkind = "free_monoid"\nalphabet = ["a"]\n')
    with pytest.raises(ConfigError, match="cap"):
        cfg.semigroup()
