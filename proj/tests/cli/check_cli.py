"""Runs the CLI on small configurations and validates reports against the shipped schemas."""
import json
import os
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], sys.argv[2]
with open(os.path.join(schema_dir, "report.schema.json")) as f:
    report_schema = json.load(f)
with open(os.path.join(schema_dir, "coefficients.schema.json")) as f:
    coeff_schema = json.load(f)

failed = []


def run(args, expect_rc, env=None):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, env=env)
    if proc.returncode != expect_rc:
        failed.append(f"{' '.join(args)}: exit {proc.returncode}, expected {expect_rc}\n{proc.stderr}")
        return None
    if expect_rc == 2 or "--format" in args and "text" in args:
        return proc.stdout
    report = json.loads(proc.stdout)
    try:
        jsonschema.validate(report, report_schema)
    except jsonschema.ValidationError as e:
        failed.append(f"{' '.join(args)}: schema: {e.message}")
    return report


def strip_timings(report):
    return {k: v for k, v in report.items() if k != "timings_ms"}


r = run(["inequality", "--n", "8"], 0)
if r is not None:
    if len(r["results"]) != 128 or not all(x["lhs"] <= x["rhs"] for x in r["results"]):
        failed.append("inequality --n 8: unexpected results")

r = run(["gk", "--n", "4"], 0)
if r is not None and len(r["results"]) != 24:
    failed.append("gk --n 4: expected 24 elements")

r = run(["zeta-coeffs", "--composition", "1,1,1", "--primes", "2", "--kmax", "2"], 0)
if r is not None:
    for table in r["results"]:
        jsonschema.validate(table, coeff_schema)
    entry = {tuple(c["k"]): c for c in r["results"][0]["coeffs"]}
    if entry[(1, 1)]["value_at_p"] != "3/4" or entry[(1, 1)]["value_poly_t"] != ["2", "-3", "1"]:
        failed.append("zeta-coeffs: (1,1) entry is not (1-t)(2-t)")

r = run(["oracle", "--n", "2", "--primes", "3", "--kmax", "3"], 0)
if r is not None:
    for table in r["results"]:
        jsonschema.validate(table, coeff_schema)
        for c in table["coeffs"]:
            if table["w"] == [1, 1] and c["k"][0] >= 1 and c["value_at_p"] != "2/3":
                failed.append("oracle n=2 p=3: entry is not 2/3")

for args in (["apply", "--composition", "1,2"], ["expand", "--composition", "2,1"],
             ["sup", "--n", "3", "--grid", "32"], ["nopole", "--n", "3", "--grid", "16:-2:2"]):
    run(args, 0)

first = run(["verify-all", "--n", "3", "--primes", "2,3", "--kmax", "2", "--grid", "32"], 0)
second = run(["verify-all", "--n", "3", "--primes", "2,3", "--kmax", "2", "--grid", "32"], 0,
             env={**os.environ, "IWAHORI_THREADS": "1"})
if first is not None and second is not None and strip_timings(first) != strip_timings(second):
    failed.append("verify-all: reports differ between runs")

r = run(["gk", "--n", "3", "--seed", "5"], 0)
r2 = run(["gk", "--n", "3", "--seed", "5"], 0)
if r is not None and r2 is not None and strip_timings(r) != strip_timings(r2):
    failed.append("gk: seeded runs differ")

run(["inequality", "--n", "3", "--format", "text"], 0)
run(["sup", "--n", "0"], 2)
run(["bogus"], 2)
run(["expand", "--composition", "1,2", "--n", "4"], 2)
run(["expand", "--composition", "1,1,1,1,1,1", "--max-subsets", "100"], 2)
run(["sup", "--grid", "abc"], 2)
run(["oracle", "--n", "4"], 2)

for f in failed:
    print("FAIL", f)
print(f"{'FAIL' if failed else 'PASS'} cli reports")
sys.exit(1 if failed else 0)
