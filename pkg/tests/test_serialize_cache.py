import json

from qtchar.algorithm import fundamental_qcharacter
from qtchar.cache import ENV_VAR, ResultCache, cache_dir, cache_key, cached
from qtchar.cartan import build_cartan
from qtchar.qt import fundamental_qt
from qtchar.serialize import emit_character, parse_character

B2 = build_cartan("B", 2)


def test_text_round_trip():
    ch = fundamental_qcharacter(build_cartan("D", 4), 2, 0)
    data = emit_character(ch)
    assert "2 Y_{2,2}Y^{-1}_{2,4}" in data.decode().splitlines()
    assert parse_character(data) == ch
    assert emit_character(ch) == data


def test_json_field_order_and_round_trip():
    ch = fundamental_qcharacter(B2, 1, 0)
    doc = json.loads(emit_character(ch, "json"))
    assert list(doc) == ["head", "truncated", "max_height", "terms"]
    assert list(doc["terms"][0]) == ["monomial", "coeff"]
    assert parse_character(emit_character(ch, "json")) == ch


def test_qt_forms():
    tch = fundamental_qt(build_cartan("F", 4), 2, 0)
    text = emit_character(tch).decode()
    assert len(text.splitlines()) == len(tch)
    doc = json.loads(emit_character(tch, "json"))
    assert list(doc["terms"][0]) == ["monomial", "coeff", "v"]


def test_truncation_banner():
    win = fundamental_qcharacter(build_cartan("AffineA", 2), 1, 0, max_height=6)
    text = emit_character(win).decode()
    assert text.startswith("# truncated: terms of height > 6 omitted\n")
    back = parse_character(text)
    assert back.truncated and back == win


def test_cache_put_get_and_miss(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key(family="B2", node=1, shift=0)
    assert cache.get(key) is None
    cache.put(key, b"payload\n")
    assert cache.get(key) == b"payload\n"
    assert cache.status()["entries"] == 1
    calls = []
    assert cached(cache, key, lambda: calls.append(1) or b"other") == b"payload\n" and not calls
    assert cache.clear() == 1 and cache.get(key) is None


def test_cache_corruption_recomputes(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key(family="F4", node=3, shift=0)
    cache.put(key, b"good")
    path = next(tmp_path.glob("*/*.qtc"))
    path.write_bytes(path.read_bytes()[:-1] + b"X")
    assert cache.get(key) is None and not path.exists()
    assert cached(cache, key, lambda: b"good") == b"good"
    assert cache.get(key) == b"good"


def test_cache_key_and_env(monkeypatch, tmp_path):
    assert cache_key(a=1, b=2) == cache_key(b=2, a=1)
    assert cache_key(a=1, t=False) != cache_key(a=1, t=True)
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "x"))
    assert cache_dir() == tmp_path / "x"


def test_cache_hit_matches_recomputation(tmp_path):
    cache = ResultCache(tmp_path)
    compute = lambda: emit_character(fundamental_qcharacter(B2, 2, 0))  # noqa: E731
    key = cache_key(family="B2", node=2, shift=0)
    first = cached(cache, key, compute)
    assert cached(cache, key, compute) == first == compute()
