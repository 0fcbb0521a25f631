"""Validates CLI JSON exports against the published schema and checks that
exported cell counts agree with the text report."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(cmd, stdin=None):
    return subprocess.run(cmd, input=stdin, capture_output=True, check=True).stdout


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    doc = run([cli, "gen", "--double-simplex", "3"])
    doc = run([cli, "subdivide", "--barycentric"], doc)
    doc = run([cli, "partition", "--scheme", "odd-bary"], doc)
    rp3 = run([cli, "gen", "--cross-projective", "3"])
    rp3 = run([cli, "partition", "--scheme", "pairs", "--blocks", "0,1/2,3"], rp3)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        outputs = []
        for name, data, extra in [("s3", doc, ["--cells"]), ("rp3", rp3, []), ("plain", run([cli, "gen", "--cross-sphere", "2"]), [])]:
            path = tmp / f"{name}.json"
            run([cli, "export", "--json", str(path)] + extra, data)
            outputs.append((name, data, path))
        report = tmp / "report.json"
        run([cli, "report", "--out", str(report)], doc)
        outputs.append(("report", doc, report))
        for name, data, path in outputs:
            payload = json.loads(path.read_text())
            jsonschema.validate(payload, schema)
            print(f"ok   {name} export validates")
            for c in payload.get("complexes", []):
                subset = ",".join(str(x) for x in c["subset"])
                text = run([cli, "build", "--subset", subset], data).decode()
                line = next(l for l in text.splitlines() if l.startswith("counts "))
                reported = [int(x) for x in line.split()[1:]]
                assert reported == c["counts"], (name, subset, reported, c["counts"])
                if "cells" in c:
                    assert [len(level) for level in c["cells"]] == c["counts"], (name, subset)
            print(f"ok   {name} counts agree with build")
    print("schema checks passed")


if __name__ == "__main__":
    main()
