"""CLI contract tests: output shapes, JSON round-trips, exit codes."""

import io
import json

import pytest

from ellcy import checks, forms
from ellcy.cli import doc_to_series, main, series_to_doc
from ellcy.series import QSeries


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


class TestSeriesCommand:
    def test_inv_delta(self):
        code, text = run(["series", "inv-delta", "--prec", "4"])
        assert code == 0
        assert text == "-1\t1\n0\t24\n1\t324\n2\t3200\n"

    def test_e10(self):
        code, text = run(["series", "e10", "--prec", "3"])
        assert code == 0
        assert text == "0\t1\n1\t-264\n2\t-135432\n"

    def test_theta_equals_e4_rows(self):
        _, theta = run(["series", "theta-e8", "--prec", "3"])
        _, e4 = run(["series", "e4", "--prec", "3"])
        assert theta == e4 == "0\t1\n1\t240\n2\t2160\n"

    def test_half_integer_display(self):
        code, text = run(["series", "inv-sqrt-delta", "--prec", "3"])
        assert code == 0
        assert text.splitlines()[0] == "-1/2\t1"
        assert text.splitlines()[1] == "1/2\t12"

    def test_unknown_name_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            run(["series", "zeta"])
        assert exc.value.code == 1

    def test_bad_prec_is_usage_error(self):
        code, _ = run(["series", "e4", "--prec", "0"])
        assert code == 1

    def test_deterministic(self):
        a = run(["series", "delta", "--prec", "10"])
        b = run(["series", "delta", "--prec", "10"])
        assert a == b


class TestJsonRoundTrip:
    @pytest.mark.parametrize("name", ["delta", "inv-delta", "e4", "e6",
                                      "e10", "theta-e8", "inv-sqrt-delta"])
    def test_round_trip(self, name):
        code, text = run(["series", name, "--prec", "6", "--json"])
        assert code == 0
        doc = json.loads(text)
        assert set(doc) == {"variable", "exp_den", "offset", "prec", "coeffs"}
        restored = doc_to_series(doc)
        code2, text2 = run(["series", name, "--prec", "6", "--json"])
        assert json.loads(text2) == series_to_doc(restored)

    def test_big_integers_survive(self):
        f = forms.inverse_delta(40)
        doc = series_to_doc(f)
        assert doc_to_series(doc) == f
        # coefficients overflow 64 bits well before 40 terms
        assert any(int(c["num"]) > 2 ** 64 for c in doc["coeffs"])

    def test_rationals_as_strings(self):
        doc = series_to_doc(QSeries([1, 2], 0, 2))
        for c in doc["coeffs"]:
            assert isinstance(c["num"], str)
            assert isinstance(c["den"], str)


class TestGvCommand:
    def test_fiber_closed(self):
        code, text = run(["gv", "fiber", "--prec", "4", "--method", "closed"])
        assert code == 0
        values = [line.split("\t")[2] for line in text.splitlines()]
        assert values == ["-2", "480", "282888", "17058560"]

    def test_section(self):
        code, text = run(["gv", "section", "--prec", "4"])
        values = [line.split("\t")[2] for line in text.splitlines()]
        assert code == 0
        assert values == ["1", "252", "5130", "54760"]

    def test_fiber_routes_diff_is_empty(self):
        _, closed = run(["gv", "fiber", "--prec", "20", "--method", "closed"])
        _, direct = run(["gv", "fiber", "--prec", "20", "--method", "direct"])
        assert closed == direct

    def test_multifiber_routes_diff_is_empty(self):
        for m in ("2", "3"):
            _, closed = run(["gv", "multifiber", "--m", m, "--prec", "8",
                             "--method", "closed"])
            _, direct = run(["gv", "multifiber", "--m", m, "--prec", "8",
                             "--method", "direct"])
            assert closed == direct

    def test_multifiber_requires_m(self):
        code, _ = run(["gv", "multifiber", "--prec", "4"])
        assert code == 1
        code, _ = run(["gv", "multifiber", "--m", "1", "--prec", "4"])
        assert code == 1


class TestNlCommand:
    def test_origin(self):
        code, text = run(["nl", "--h", "0", "--d1", "0", "--d2", "0"])
        assert code == 0
        assert text == "1056\n"

    def test_negative_discriminant_note(self):
        code, text = run(["nl", "--h", "5", "--d1", "0", "--d2", "1"])
        assert code == 0
        assert text == "0 (discriminant negative)\n"

    def test_discriminant_zero(self):
        code, text = run(["nl", "--h", "1", "--d1", "-1", "--d2", "1"])
        assert code == 0
        assert text == "-4\n"


class TestEulerCommand:
    def test_default(self):
        code, text = run(["euler"])
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == "deg K_Delta\t1056"
        assert lines[1] == "cusps\t192"
        assert lines[2] == "e(Delta)\t-672"
        assert lines[3] == "e(X)\t-480"
        assert lines[4].endswith("consistent")
        assert "2(3-243) = -480" in lines[4]

    def test_lsq_one(self):
        code, text = run(["euler", "--lsq", "1"])
        assert code == 0
        assert text == "deg K_Delta\t132\ncusps\t24\ne(Delta)\t-84\ne(X)\t-60\n"


class TestCheckCommand:
    def test_passes(self):
        code, text = run(["check", "--prec", "6"])
        assert code == 0
        assert "FAIL" not in text
        assert text.strip().endswith("checks passed")

    def test_corrupted_e10_detected(self, monkeypatch):
        real = forms.eisenstein

        def corrupted(k, nterms):
            f = real(k, nterms)
            if k != 10 or nterms < 3:
                return f
            cs = list(f.coeffs)
            cs[2] += 1
            return QSeries(cs, f.offset, f.prec, f.exp_den)

        monkeypatch.setattr(forms, "eisenstein", corrupted)
        code, text = run(["check", "--prec", "6"])
        assert code == 2
        assert "FAIL" in text

    def test_corrupted_delta_detected(self, monkeypatch):
        real = forms.eta_power

        def corrupted(e, nterms):
            f = real(e, nterms)
            if e != 24 or nterms < 3:
                return f
            cs = list(f.coeffs)
            cs[1] += 1
            return QSeries(cs, f.offset, f.prec, f.exp_den)

        monkeypatch.setattr(forms, "eta_power", corrupted)
        code, text = run(["check", "--prec", "6"])
        assert code == 2
        assert "FAIL" in text

    def test_corrupted_e4_detected(self, monkeypatch):
        real = forms.eisenstein

        def corrupted(k, nterms):
            f = real(k, nterms)
            if k != 4 or nterms < 2:
                return f
            cs = list(f.coeffs)
            cs[1] -= 1
            return QSeries(cs, f.offset, f.prec, f.exp_den)

        monkeypatch.setattr(forms, "eisenstein", corrupted)
        code, text = run(["check", "--prec", "6"])
        assert code == 2
        assert "theta-e8-equals-e4" in [
            line.split("\t")[1] for line in text.splitlines()
            if line.startswith("FAIL")]


class TestExitCodes:
    def test_no_arguments_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 1

    def test_unknown_command_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 1
