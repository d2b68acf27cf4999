"""End-to-end checks of the hfibre binary: exit codes, error JSON, determinism."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

HFIBRE = os.environ.get("HFIBRE", "hfibre")


def run(*args, env=None):
    return subprocess.run([HFIBRE, *args], capture_output=True, text=True, env=env)


class Cli(unittest.TestCase):
    def test_analyze_smooth(self):
        r = run("analyze", "--g", "2", "--ds", "p+q+r+s")
        self.assertEqual(r.returncode, 0, r.stderr)
        j = json.loads(r.stdout)
        self.assertEqual(j["branch"], "Smooth")
        self.assertEqual(j["fibre_dim"], 3)

    def test_analyze_json_roundtrips_input(self):
        first = json.loads(run("analyze", "--g", "2", "--d", "1", "--ds", "2p+2q", "--reducible").stdout)
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump(first["input"], f)
        try:
            again = run("analyze", "--json", f.name)
        finally:
            os.unlink(f.name)
        self.assertEqual(again.returncode, 0, again.stderr)
        self.assertEqual(json.loads(again.stdout), first)

    def test_malformed_json_exit_2(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write('{"g": 2,')
        try:
            r = run("analyze", "--json", f.name)
        finally:
            os.unlink(f.name)
        self.assertEqual(r.returncode, 2)
        self.assertEqual(r.stdout, "")
        err = json.loads(r.stderr)
        self.assertEqual(list(err), ["error", "path", "message"])

    def test_validation_paths(self):
        for args, path in [
            (["--g", "1", "--ds", "4p"], "/g"),
            (["--g", "2", "--ds", "3p"], "/D_s"),
            (["--g", "2", "--ds", "3p+q", "--reducible"], "/reducible"),
            (["--g", "2", "--ds", "4p", "--dl", "0"], "/d_L"),
        ]:
            r = run("analyze", *args)
            self.assertEqual(r.returncode, 2, args)
            self.assertEqual(json.loads(r.stderr)["path"], path, args)

    def test_unknown_field(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump({"g": 2, "D_s": "4p", "colour": "red"}, f)
        try:
            r = run("analyze", "--json", f.name)
        finally:
            os.unlink(f.name)
        self.assertEqual(r.returncode, 2)
        self.assertEqual(json.loads(r.stderr)["path"], "/colour")

    def test_strata_four_rows(self):
        r = run("strata", "--g", "2", "--d", "2", "--dprime", "2p")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(len(json.loads(r.stdout)["strata"]), 4)

    def test_verify_example(self):
        r = run("verify-example", "--m", "4")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(json.loads(r.stdout)["result"], "PASS")
        self.assertEqual(json.loads(run("verify-example", "--m", "4", "--case2").stdout)["result"], "PASS")
        self.assertEqual(run("verify-example", "--m", "6", "--case2").returncode, 2)

    def test_roundtrip_deterministic(self):
        a = run("roundtrip", "--seed", "7", "--trials", "120")
        b = run("roundtrip", "--seed", "7", "--trials", "120")
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)
        self.assertNotEqual(a.stdout, run("roundtrip", "--seed", "8", "--trials", "120").stdout)

    def test_sweep(self):
        a = run("sweep")
        self.assertEqual(a.returncode, 0)
        j = json.loads(a.stdout)
        self.assertTrue(all(c["status"] == "PASS" for c in j["criteria"]))
        self.assertEqual(a.stdout, run("sweep").stdout)

    def test_logging_stays_on_stderr(self):
        quiet = run("analyze", "--g", "2", "--ds", "4p")
        loud = run("analyze", "--g", "2", "--ds", "4p", env={**os.environ, "HF_LOG": "debug"})
        self.assertEqual(quiet.stdout, loud.stdout)
        self.assertIn("analyze", loud.stderr)

    def test_usage_error(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("strata", "--g", "2").returncode, 2)


if __name__ == "__main__":
    if len(sys.argv) > 1:
        HFIBRE = sys.argv.pop(1)
    unittest.main()
