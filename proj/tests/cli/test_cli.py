"""End-to-end checks of the qortho command line against golden configs.

usage: test_cli.py QORTHO GOLDEN_DIR SCHEMA [--regen]

Each NAME.case.json holds {"args", "exit", "stderr_contains"?}. Runs that
exit 0 or 1/2 with a report are compared against NAME.expected.json (or
.csv) with a numeric tolerance; --regen rewrites those files.
"""

import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

REL = 1e-9
ABS = 1e-12


def run(exe, args):
    p = subprocess.run([exe, *args], capture_output=True, timeout=300)
    return p.returncode, p.stdout, p.stderr.decode()


def close(a, b, path, errors):
    if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, (int, float)) or not isinstance(b, (int, float)):
        if type(a) is not type(b) and not (a is None or b is None):
            errors.append(f"{path}: type {type(a).__name__} vs {type(b).__name__}")
        elif isinstance(a, dict):
            if a.keys() != b.keys():
                errors.append(f"{path}: keys {sorted(set(a) ^ set(b))}")
            for k in a.keys() & b.keys():
                close(a[k], b[k], f"{path}.{k}", errors)
        elif isinstance(a, list):
            if len(a) != len(b):
                errors.append(f"{path}: length {len(a)} vs {len(b)}")
            for i, (x, y) in enumerate(zip(a, b)):
                close(x, y, f"{path}[{i}]", errors)
        elif a != b:
            errors.append(f"{path}: {a!r} vs {b!r}")
        return
    if not math.isclose(a, b, rel_tol=REL, abs_tol=ABS):
        errors.append(f"{path}: {a!r} vs {b!r}")


def close_csv(a, b, errors):
    la, lb = a.splitlines(), b.splitlines()
    if len(la) != len(lb):
        errors.append(f"csv: {len(la)} vs {len(lb)} lines")
        return
    for n, (x, y) in enumerate(zip(la, lb)):
        for c, (u, v) in enumerate(zip(x.split(","), y.split(","))):
            try:
                fu, fv = float(u), float(v)
            except ValueError:
                if u != v:
                    errors.append(f"csv line {n} col {c}: {u!r} vs {v!r}")
                continue
            if not math.isclose(fu, fv, rel_tol=REL, abs_tol=ABS):
                errors.append(f"csv line {n} col {c}: {u} vs {v}")


def check_case(exe, golden, schema, name, regen):
    case = json.load(open(os.path.join(golden, name + ".case.json")))
    args = case["args"]
    is_csv = "csv" in args
    stamped = not is_csv and case["exit"] != 64
    errors = []

    code, out, err = run(exe, args + (["--no-timestamp"] if stamped else []))
    if code != case["exit"]:
        errors.append(f"exit {code}, expected {case['exit']}: {err.strip()}")
    if "stderr_contains" in case and case["stderr_contains"] not in err:
        errors.append(f"stderr lacks {case['stderr_contains']!r}: {err.strip()}")
    if case["exit"] == 64:
        if out:
            errors.append("usage error wrote to stdout")
        return errors

    code2, out2, _ = run(exe, args + (["--no-timestamp"] if stamped else []))
    if code2 != code or out2 != out:
        errors.append("second run is not byte-identical")

    text = out.decode()
    expected = os.path.join(golden, name + (".expected.csv" if is_csv else ".expected.json"))
    if is_csv:
        if not text.startswith("identity_id,i,j,lhs,rhs,residual,terms_used,tail_estimate,status\n"):
            errors.append("csv header")
    else:
        doc = json.loads(text)
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as e:
            errors.append(f"schema: {e.message} at {list(e.absolute_path)}")
        if "generated_at" in doc:
            errors.append("generated_at present under --no-timestamp")
        # The timestamped run must also validate.
        _, stamped_out, _ = run(exe, args)
        stamped_doc = json.loads(stamped_out)
        if "generated_at" not in stamped_doc:
            errors.append("generated_at missing by default")
        try:
            jsonschema.validate(stamped_doc, schema)
        except jsonschema.ValidationError as e:
            errors.append(f"schema (timestamped): {e.message}")

    if regen:
        with open(expected, "w") as f:
            f.write(text)
    elif not os.path.exists(expected):
        errors.append(f"missing {os.path.basename(expected)}")
    else:
        ref = open(expected).read()
        if is_csv:
            close_csv(text, ref, errors)
        else:
            close(json.loads(text), json.loads(ref), "$", errors)
    return errors[:10]


def check_out_file(exe, schema):
    errors = []
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "report.json")
        code, out, _ = run(exe, ["verify", "--identity", "meixner", "--index-max", "2", "--out", path])
        if code != 0 or out:
            errors.append(f"--out: exit {code}, stdout {len(out)} bytes")
        else:
            jsonschema.validate(json.load(open(path)), schema)
        code, _, err = run(exe, ["verify", "--identity", "sears", "--out", os.path.join(d, "missing", "x.json")])
        if code != 1:
            errors.append(f"unwritable --out: exit {code}")
    return errors


def main():
    regen = "--regen" in sys.argv
    exe, golden, schema_path = [a for a in sys.argv[1:] if a != "--regen"]
    schema = json.load(open(schema_path))
    jsonschema.Draft202012Validator.check_schema(schema)
    names = sorted(f[: -len(".case.json")] for f in os.listdir(golden) if f.endswith(".case.json"))
    failed = 0
    for name in names:
        errors = check_case(exe, golden, schema, name, regen)
        print(f"{'ok  ' if not errors else 'FAIL'} {name}")
        for e in errors:
            print(f"     {e}")
        failed += bool(errors)
    errors = check_out_file(exe, schema)
    print(f"{'ok  ' if not errors else 'FAIL'} out_file")
    for e in errors:
        print(f"     {e}")
    failed += bool(errors)
    print(f"{len(names) + 1 - failed}/{len(names) + 1} cases passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
