"""End-to-end checks of the mmw executable: outputs and exit statuses."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

MMW = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([MMW, *map(str, args)], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)
        if detail:
            print("     " + detail)


with tempfile.TemporaryDirectory() as tmp:
    d = Path(tmp)

    def put(name, obj):
        path = d / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return path

    k2 = put("k2.json", {"n": 2, "edges": [[1, 0]]})
    c5 = put("c5.json", {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]})
    no_inst = put("no_inst.json", {"items": [3, 1, 1, 2, 1]})
    yes_inst = put("yes_inst.json", {"items": [1, 1, 1, 3, 2, 1]})
    ones = put("ones.json", {"items": [1, 1, 1]})

    rc, out, _ = run("solve", "mmw", "--graph", k2)
    r = json.loads(out)
    expect("solve mmw on K2", rc == 0 and r["width"] == 1 and "witness" in r, out)

    rc, out, _ = run("solve", "chain", "--graph", c5)
    r = json.loads(out)
    expect("chain on C5", rc == 0 and r["chain_ok"] and (r["mmw"], r["bw"], r["tw"]) == (2, 2, 2), out)

    rc, out, _ = run("oracle", "p3", "--instance", no_inst)
    expect("p3 NO is a successful run", rc == 0 and json.loads(out) == {"answer": "NO", "reason": "sum not divisible by 3"}, out)

    rc, out, _ = run("oracle", "p3", "--instance", yes_inst)
    expect("p3 YES parts", rc == 0 and json.loads(out)["parts"] == [[1, 1, 1], [3], [2, 1]], out)

    rc, out, _ = run("oracle", "p2", "--instance", put("p2.json", {"items": [2, 3, 5]}))
    expect("p2 YES", rc == 0 and json.loads(out)["answer"] == "YES", out)

    rc, out, _ = run("reduce", "p2p3", "--instance", put("odd.json", {"items": [1, 2]}))
    expect("p2p3 odd total is forced NO", rc == 0 and json.loads(out) == {"instance": {"items": [1, 1, 2]}, "forced_no": True}, out)

    rc, out, _ = run("reduce", "p3graph", "--instance", ones)
    sg = json.loads(out)["graph"]
    expect("p3graph shape", rc == 0 and sg["n"] == 6 and len(sg["edges"]) == 6, out)
    sg_path = put("sg.json", sg)

    rc, out, _ = run("build-rep", "--graph", sg_path)
    built = json.loads(out)
    expect("build-rep", rc == 0 and built["answer"] == "YES" and built["max_load"] == 1, out)
    rep = put("rep.json", built["representation"])
    rc, out, _ = run("verify-rep", "--graph", sg_path, "--rep", rep, "--k", 1)
    expect("verify-rep accepts built rep", rc == 0 and json.loads(out)["pass"], out)

    rc, out, _ = run("certify", "--instance", ones)
    cert = json.loads(out)
    expect("certify {1,1,1}", rc == 0 and cert["consistent"] and cert["mmw"] == 1, out)

    rc, out, _ = run("cut", "--graph", c5, "--set", "0,2")
    expect("cut", rc == 0 and json.loads(out) == {"mm": 2, "set": [0, 2]}, out)

    rc, out, _ = run("cut", "--graph", c5, "--check", "--seed", 7)
    expect("cut --check", rc == 0 and json.loads(out)["properties"]["pass"], out)

    rc, one, _ = run("sweep", "solver-agreement", "--max-total", 9, "--workers", 1)
    rc2, many, _ = run("sweep", "solver-agreement", "--max-total", 9, "--workers", 4)
    expect("sweep deterministic across workers", rc == rc2 == 0 and one == many and json.loads(one)["violations"] == 0)

    rc, out, _ = run("sweep", "chain", "--n", 4, "--format", "table")
    expect("table format", rc == 0 and "chain_ok" in out, out)

    # exit statuses
    rc, out, err = run("solve", "mmw", "--graph", d / "missing.json")
    expect("missing file exits 1", rc == 1 and out == "" and err != "", err)
    rc, _, err = run("solve", "mmw", "--graph", put("bad.json", "{not json"))
    expect("malformed JSON exits 1", rc == 1, err)
    rc, _, err = run("solve", "mmw", "--graph", put("loop.json", {"n": 2, "edges": [[0, 0]]}))
    expect("self loop exits 1", rc == 1, err)
    rc, _, err = run("solve", "mmw", "--graph", k2, "--frobnicate")
    expect("unknown flag exits 1", rc == 1, err)
    rc, _, err = run("solve", "mmw", "--graph", k2, "--cap-mmw-n", 0)
    expect("non-positive cap exits 1", rc == 1, err)
    big = put("k12.json", {"n": 12, "edges": [[i, j] for i in range(12) for j in range(i + 1, 12)]})
    rc, out, err = run("solve", "mmw", "--graph", big)
    expect("mmw over cap exits 2", rc == 2 and out == "" and "cap" in err, err)
    rc, _, err = run("sweep", "chain", "--n", 5, "--cap-bw-m", 5)
    expect("sweep over cap exits 2", rc == 2, err)
    broken = put("broken.json", {"host_edges": [[0, 1], [0, 2], [0, 3]],
                                 "subtrees": {"0": [[0, 1]], "1": [[0, 2]], "2": [[0, 3]], "3": [[0, 1]], "4": [[0, 1]], "5": [[0, 1]]}})
    rc, out, _ = run("verify-rep", "--graph", sg_path, "--rep", broken, "--k", 3)
    expect("invalid rep is a result, not an error", rc == 0 and not json.loads(out)["pass"], out)
    rc, _, err = run("verify-rep", "--graph", sg_path, "--rep", put("path.json", {"host_edges": [[0, 1], [1, 2]], "subtrees": {}}))
    expect("malformed host exits 1", rc == 1, err)
    bad_parts = put("parts.json", {"c_parts": [[0, 1], [2], []], "i_parts": [[3, 4], [5], []]})
    rc, _, err = run("build-rep", "--graph", sg_path, "--parts", bad_parts)
    expect("unbalanced tripartition exits 1", rc == 1, err)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
