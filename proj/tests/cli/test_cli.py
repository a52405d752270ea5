#!/usr/bin/env python3
"""End-to-end checks of the pachlab command line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BINARY = None


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=600)


class CliTest(unittest.TestCase):
    def test_bounds(self):
        proc = run("bounds", "--d", "2", "--n", "100")
        self.assertEqual(proc.returncode, 0, proc.stderr)
        doc = json.loads(proc.stdout)
        self.assertEqual(doc["tool"], "pachlab")
        self.assertEqual(doc["command"], "bounds")
        self.assertEqual(doc["result"]["coloring"]["threshold"], 116)
        self.assertEqual(doc["result"]["gromov_bound"], "1/192")

    def test_reruns_are_byte_identical(self):
        for args in (
            ("cofill", "--d", "2", "--n", "2", "--seed", "3"),
            ("sphere-exp", "--n", "4", "--seed", "1", "--trials", "2", "--max-candidates", "30"),
            ("extract", "--n", "6", "--density", "0.7", "--seed", "9"),
            ("build-map", "--n", "3", "--seed", "5"),
        ):
            first, second = run(*args), run(*args)
            self.assertEqual(first.returncode, 0, first.stderr)
            self.assertEqual(first.stdout, second.stdout, args)

    def test_jobs_do_not_change_output(self):
        args = ("sphere-exp", "--n", "4", "--seed", "2", "--trials", "2")
        one = json.loads(run(*args, "--jobs", "1").stdout)
        three = json.loads(run(*args, "--jobs", "3").stdout)
        self.assertEqual(one["result"], three["result"])

    def test_csv_has_config_header(self):
        proc = run("sphere-exp", "--n", "3", "--seed", "1", "--trials", "1", "--format", "csv")
        self.assertEqual(proc.returncode, 0, proc.stderr)
        lines = proc.stdout.splitlines()
        self.assertTrue(lines[0].startswith("# pachlab"))
        self.assertTrue(lines[1].startswith("# config "))
        self.assertTrue(lines[2].startswith("seed,filling,candidate_index"))

    def test_missing_seed_is_refused(self):
        proc = run("cofill", "--d", "2", "--n", "2")
        self.assertEqual(proc.returncode, 2)
        self.assertEqual(proc.stdout, "")
        err = json.loads(proc.stderr.strip().splitlines()[-1])
        self.assertEqual(err["error"]["type"], "usage")

    def test_pipeline_round_trip_and_invalid_map(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "map.json")
            proc = run("build-map", "--n", "3", "--seed", "2", "--affine", "--out", path)
            self.assertEqual(proc.returncode, 0, proc.stderr)
            good = run("pipeline", "--map", path, "--seed", "1")
            self.assertEqual(good.returncode, 0, good.stderr)
            result = json.loads(good.stdout)["result"]
            self.assertTrue(result["verified"])

            with open(path) as f:
                artifact = json.load(f)
            plmap = artifact["result"]["map"]
            plmap["faces"][0]["triangles"] = []
            bad_path = os.path.join(tmp, "bad.json")
            with open(bad_path, "w") as f:
                json.dump(plmap, f)
            bad = run("pipeline", "--map", bad_path, "--seed", "1")
            self.assertEqual(bad.returncode, 1)
            self.assertEqual(bad.stdout, "")
            err = json.loads(bad.stderr.strip().splitlines()[-1])["error"]
            self.assertEqual(err["type"], "validation")
            self.assertTrue(err["details"]["violations"])

    def test_malformed_map_is_reported(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "junk.json")
            with open(path, "w") as f:
                f.write('{"format": "pachlab.plmap", "d": 2}')
            proc = run("pipeline", "--map", path, "--seed", "1")
            self.assertNotEqual(proc.returncode, 0)
            json.loads(proc.stderr.strip().splitlines()[-1])


if __name__ == "__main__":
    BINARY = sys.argv.pop(1)
    unittest.main(verbosity=2)
