"""Tests for JSON schemas and the command-line interface."""

import json
import random

import pytest

from prymkit.cli import main
from prymkit.covers import DoubleCoverData, galois_pushforward
from prymkit.norms import SpectralPoly
from prymkit.polynomials import Poly
from prymkit.serialize import (
    SchemaError,
    cover_from_json,
    cover_to_json,
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    rational_from_json,
    rational_to_json,
    spectral_from_json,
    spectral_to_json,
    twisted_from_json,
    twisted_to_json,
)
from prymkit.verify import (
    cn_descriptor,
    random_descriptor,
    random_element,
    random_spectral,
    random_squarefree,
    random_twisted,
)

X = Poly.x()


class TestSchemas:
    def test_rational_round_trip(self):
        from fractions import Fraction
        for q in (Fraction(0), Fraction(-3, 7), Fraction(5)):
            assert rational_from_json(rational_to_json(q), "$") == q
        assert rational_to_json(Fraction(5)) == "5/1"

    def test_rational_rejects_malformed(self):
        for bad in ("3", "a/b", "1/0", 3, None):
            with pytest.raises(SchemaError):
                rational_from_json(bad, "$")

    def test_spectral_round_trip(self):
        rng = random.Random(3)
        for _ in range(10):
            s = random_spectral(rng)
            assert spectral_from_json(spectral_to_json(s)) == s

    def test_element_round_trip(self):
        rng = random.Random(5)
        s = random_spectral(rng)
        u = random_element(rng, s)
        assert element_from_json(s, element_to_json(u)) == u

    def test_descriptor_round_trip(self):
        rng = random.Random(7)
        for _ in range(10):
            d = random_descriptor(rng)
            assert descriptor_from_json(descriptor_to_json(d)) == d

    def test_twisted_round_trip(self):
        rng = random.Random(9)
        cover = DoubleCoverData(random_squarefree(rng))
        tw = random_twisted(rng, cover, 2, deg_m=1)
        assert twisted_from_json(twisted_to_json(tw)) == tw
        assert cover_from_json(cover_to_json(cover)) == cover

    def test_field_path_in_errors(self):
        doc = {"n": 2, "deg_m": 1, "coeffs": [["1/1"], ["bad"]]}
        with pytest.raises(SchemaError) as exc:
            spectral_from_json(doc)
        assert "coeffs[1][0]" in str(exc.value)

    def test_missing_field_reported(self):
        with pytest.raises(SchemaError) as exc:
            descriptor_from_json({"n": 2, "components": []})
        assert "'g'" in str(exc.value)


class TestCli:
    def _write(self, tmp_path, name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return str(p)

    def test_pi0_cn(self, tmp_path, capsys):
        path = self._write(tmp_path, "d.json", descriptor_to_json(cn_descriptor(2, 2)))
        assert main(["pi0", "--input", path]) == 0
        out = json.loads(capsys.readouterr().out)
        payload = out["payload"]
        assert payload["pi0_order"] == 16
        assert payload["pi0_invariant_factors"] == [2, 2, 2, 2]
        assert payload["is_cn"] is True

    def test_pi0_schema_error_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        assert main(["pi0", "--input", str(p)]) == 2

    def test_pi0_invariant_error_exit_3(self, tmp_path):
        doc = {"n": 3, "g": 1, "components": [
            {"degree": 1, "multiplicity": 2, "kernel_modulus": 1,
             "kernel_generators": []}]}
        path = self._write(tmp_path, "d.json", doc)
        assert main(["pi0", "--input", path]) == 3

    def test_unknown_command_exit_2(self):
        assert main(["bogus"]) == 2

    def test_endoscopy(self, capsys):
        assert main(["endoscopy", "--n", "6", "--g", "2"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["payload"]["dims"] == {"1": 35, "2": 17, "3": 11, "6": 5}
        assert out["payload"]["c_n"] == 18
        assert out["payload"]["bound"] == 36

    def test_endoscopy_bad_args(self, capsys):
        assert main(["endoscopy", "--n", "1", "--g", "2"]) == 2

    def test_norm(self, tmp_path, capsys):
        s = SpectralPoly(2, 1, (Poly.zero(), -X))
        doc = {"spectral": spectral_to_json(s),
               "element": element_to_json(s.t())}
        path = self._write(tmp_path, "n.json", doc)
        assert main(["norm", "--input", path]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["payload"]["norm"] == ["0/1", "-1/1"]
        assert out["payload"]["resultant_oracle_agrees"] is True

    def test_factor(self, tmp_path, capsys):
        s = SpectralPoly(2, 1, (X.scale(-2), X * X))  # (t - x)^2
        path = self._write(tmp_path, "f.json", spectral_to_json(s))
        assert main(["factor", "--input", path]) == 0
        out = json.loads(capsys.readouterr().out)
        blocks = out["payload"]["blocks"]
        assert len(blocks) == 1
        assert blocks[0]["multiplicity"] == 2

    def test_galois_both_directions(self, tmp_path, capsys):
        cover = DoubleCoverData(X * X - 1)
        rng = random.Random(1)
        tw = random_twisted(rng, cover, 1, deg_m=1)
        pushed = galois_pushforward(cover, tw)
        path = self._write(tmp_path, "g1.json",
                           {"cover": cover_to_json(cover),
                            "twisted": twisted_to_json(tw)})
        assert main(["galois", "--input", path]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["payload"]["pushforward"] == spectral_to_json(pushed)

        path = self._write(tmp_path, "g2.json",
                           {"cover": cover_to_json(cover),
                            "spectral": spectral_to_json(pushed)})
        assert main(["galois", "--input", path]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["payload"]["splits"] is True

    def test_verify_suite(self, capsys):
        assert main(["verify", "--suite", "abelian", "--seed", "1"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["payload"]["all_passed"] is True

    def test_verify_unknown_suite(self, capsys):
        assert main(["verify", "--suite", "nope"]) == 2

    def test_determinism(self, tmp_path, capsys):
        path = self._write(tmp_path, "d.json", descriptor_to_json(cn_descriptor(3, 1)))
        main(["pi0", "--input", path])
        first = capsys.readouterr().out
        main(["pi0", "--input", path])
        second = capsys.readouterr().out
        assert first == second

    def test_seed_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("PRYMKIT_SEED", "5")
        assert main(["verify", "--suite", "spectral"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["payload"]["seed"] == 5

    def test_table_format(self, capsys):
        assert main(["endoscopy", "--n", "2", "--g", "2",
                     "--format", "table"]) == 0
        out = capsys.readouterr().out
        assert "c_n: 2" in out
