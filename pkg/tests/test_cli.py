"""Command-line surface, report assembly, result cache."""

import json
import threading

import pytest

from koszulforge.cache import ResultCache, cache_key
from koszulforge.cli import main
from koszulforge.reports import analyze, render_text


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def test_stable_sets_command(capsys):
    code, out, _ = run_cli(capsys, "stable-sets", "complement(cycle(7))")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 15 and data["alpha"] == 2


def test_classify_command(capsys):
    code, out, _ = run_cli(capsys, "classify", "cycle(5)")
    assert code == 0
    data = json.loads(out)
    assert data["almost_bipartite"] is True
    assert data["comparability"] is False


def test_enumerate_command(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "4")
    assert code == 0
    assert len(json.loads(out)) == 11


def test_hilbert_command_text(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "paper:family(1)",
                           "--format", "text")
    assert code == 0
    assert out.strip() == "(1 + 8t + 21t^2 + 21t^3 + 8t^4 + t^5) / (1 - t)^10"


def test_hilbert_command_json(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "complement(cycle(7))")
    assert code == 0
    data = json.loads(out)
    assert data["h_vector"] == [1, 7, 14, 7, 1]
    assert data["dim"] == 8


def test_groebner_command_var_order(capsys):
    code, out, _ = run_cli(capsys, "groebner", "cycle(4)",
                           "--var-order",
                           "y_{2,4},y_{1,3},y_{4},y_{3},y_{2},y_{1},y_{}")
    assert code == 0
    data = json.loads(out)
    assert data["order"]["ranking"][0] == 6  # y_{2,4} is the least variable


def test_gorenstein_command(capsys):
    code, out, _ = run_cli(capsys, "gorenstein", "cycle(4)")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "Gorenstein"


def test_qgb_command(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "qgb", "cycle(5)",
                           "--cache-dir", str(tmp_path))
    assert code == 0
    data = json.loads(out)
    assert data["exists"] is True
    # second run hits the cache and prints identical JSON
    code2, out2, _ = run_cli(capsys, "qgb", "cycle(5)",
                             "--cache-dir", str(tmp_path))
    assert out2 == out


def test_koszul_command(capsys):
    code, out, _ = run_cli(capsys, "koszul", "cycle(5)")
    assert code == 0
    assert json.loads(out)["status"] == "KoszulViaQuadraticGB"


def test_input_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "stable-sets", "triangle(3)")
    assert code == 1
    assert "error" in err


def test_resource_cap_exit_code(capsys):
    code, _, err = run_cli(capsys, "qgb", "complement(cycle(7))",
                           "--marking-cap", "10", "--no-cache")
    assert code == 2
    assert "resource cap" in err


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "stable-sets", "cycle(4)",
                           "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["count"] == 7


def test_paper_suite_subset(capsys):
    code, out, _ = run_cli(capsys, "paper-suite", "--cases", "1,10")
    assert code == 0
    data = json.loads(out)
    assert data["all_passed"] is True
    assert [c["id"] for c in data["suite"]] == [1, 10]


def test_paper_suite_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "paper-suite", "--cases", "1")
    code2, out2, _ = run_cli(capsys, "paper-suite", "--cases", "1")
    a, b = json.loads(out1), json.loads(out2)
    a.pop("timings")
    b.pop("timings")
    assert a == b


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def square_report():
    return analyze("cycle(4)")


def test_analyze_square(square_report):
    r = square_report
    assert r["schema"] == "koszul-forge/1"
    assert r["stable_sets"]["count"] == 7
    assert r["ring"]["h_vector"] == [1, 2, 1]
    assert r["ring"]["embdim"] - r["ring"]["dim"] == r["ring"]["h_vector"][1]
    assert r["ideal"]["quadratic"] is True
    assert r["gorenstein"]["verdict"] == "Gorenstein"
    assert r["quadratic_gb"]["exists"] is True
    assert r["koszul"]["status"] == "KoszulViaQuadraticGB"
    assert r["headline"] == "Koszul quadratic Gorenstein"


def test_analyze_renders_text(square_report):
    text = render_text(square_report)
    assert "h=(1, 2, 1)" in text
    assert "headline" in text


def test_analyze_timings_separate_block(square_report):
    payload = dict(square_report)
    payload.pop("timings")
    assert "timings" not in json.dumps(payload)


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def test_cache_roundtrip(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key({"op": "test", "x": 1})
    assert cache.get(key) is None
    cache.put(key, {"result": [1, 2, 3]})
    entry = cache.get(key)
    assert entry["value"] == {"result": [1, 2, 3]}
    assert entry["key"] == key


def test_cache_immutable(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key({"op": "x"})
    cache.put(key, {"v": 1})
    cache.put(key, {"v": 2})
    assert cache.get_value(key) == {"v": 1}


def test_cache_keys_differ_on_content():
    assert cache_key({"a": 1}) != cache_key({"a": 2})
    assert cache_key({"a": 1, "b": 2}) == cache_key({"b": 2, "a": 1})


def test_cache_concurrent_puts(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key({"op": "concurrent"})
    errors = []

    def writer(n):
        try:
            cache.put(key, {"writer": n})
        except Exception as exc:  # noqa: BLE001
            errors.append(exc)

    threads = [threading.Thread(target=writer, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    value = cache.get_value(key)
    assert value is not None and "writer" in value
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1


def test_cache_degrades_on_unwritable_dir(capsys):
    cache = ResultCache("/proc/definitely/not/writable")
    assert not cache.enabled
    assert cache.get("abc") is None
    cache.put("abc", {})  # no crash


def test_disabled_cache():
    cache = ResultCache(None)
    assert not cache.enabled


def test_paper_suite_jobs_flag_matches_sequential(capsys):
    _, seq, _ = run_cli(capsys, "paper-suite", "--cases", "1,10")
    _, par, _ = run_cli(capsys, "paper-suite", "--cases", "1,10",
                        "--jobs", "2")
    a, b = json.loads(seq), json.loads(par)
    a.pop("timings")
    b.pop("timings")
    assert a == b
