# run_e2e.py

import json
import subprocess
import time


TEST_CASES = [
    {
        "name": "Counterexample d=2, n=8",
        "args": ["verify", "--counterexample", "--d", "2", "--n", "8", "--no-timing"],
        "description": "Smallest instance; all 9 spanning trees enumerated and certified.",
        "expected_status": "ok",
        "expected_exit": 0,
        "expected": {"verification.spanning_trees": "9", "verification.verdict": "CONFIRMED"},
    },
    {
        "name": "Counterexample d=3, n=15",
        "args": ["verify", "--counterexample", "--d", "3", "--n", "15", "--no-timing"],
        "description": "12288 trees by determinant and by enumeration; k=3 decision is false.",
        "expected_status": "ok",
        "expected_exit": 0,
        "expected": {
            "verification.trees_enumerated": "12288",
            "verification.decision.verdict": "false",
        },
    },
    {
        "name": "Counterexample d=4, n=24",
        "args": ["verify", "--counterexample", "--d", "4", "--n", "24", "--budget-nodes", "100000000", "--no-timing"],
        "description": "Too many trees to enumerate; decision solver plus 100 sampled certificates.",
        "expected_status": "ok",
        "expected_exit": 0,
        "expected": {
            "verification.spanning_trees": "3906250000",
            "verification.certificates_passed": 100,
        },
    },
    {
        "name": "Count d=4, n=24",
        "args": ["solve", "--counterexample", "--d", "4", "--n", "24", "--count", "--no-timing"],
        "description": "Exact count equal to 16 * 5**12.",
        "expected_status": "ok",
        "expected_exit": 0,
        "expected": {"count.spanning_trees": "3906250000"},
    },
    {
        "name": "MMID d=3, n=15",
        "args": ["solve", "--counterexample", "--d", "3", "--n", "15", "--mmid", "--no-timing"],
        "description": "No spanning tree has all internal degrees >= 3.",
        "expected_status": "ok",
        "expected_exit": 0,
        "expected": {"mmid.value": 2, "mmid.exhaustive": True},
    },
    {
        "name": "Star factor d=2, n=8",
        "args": ["solve", "--counterexample", "--d", "2", "--n", "8", "--starfactor", "--no-timing"],
        "description": "Both anchors carry a 3-star covering all 8 vertices.",
        "expected_status": "ok",
        "expected_exit": 0,
        "expected": {"star_factor.value": 3},
    },
    {
        "name": "Invalid parameters",
        "args": ["generate", "--counterexample", "--d", "2", "--n", "7"],
        "description": "n below d(d+2) is rejected with the violated bound named.",
        "expected_status": None,
        "expected_exit": 2,
        "expected": {},
    },
]


def lookup(results: dict, dotted: str):
    value = results
    for key in dotted.split("."):
        value = value[key]
    return value


def run_test_case(case: dict):

    command_parts = ["python", "-m", "src.main", *case["args"]]

    print(f"\n--- Running Case: {case['name']} ({case['description']}) ---")

    # Execute the command
    started = time.monotonic()
    result = subprocess.run(
        command_parts,
        capture_output=True,
        text=True,
        check=False
    )
    elapsed = time.monotonic() - started

    if result.returncode != case["expected_exit"]:
        print(f"❌ Case {case['name']} FAILED with return code {result.returncode}.")
        # Print the error stream to see why the command failed
        print("\n--- ERROR OUTPUT (stderr) ---")
        print(result.stderr[-2000:])
        print("-----------------------------")
        return False

    if case["expected_status"] is None:
        print(f"✅ Case {case['name']} exited with {result.returncode} as expected ({elapsed:.2f}s).")
        return True

    report = json.loads(result.stdout)
    mismatches = [
        f"{key}: expected {expected!r}, got {lookup(report['results'], key)!r}"
        for key, expected in case["expected"].items()
        if lookup(report["results"], key) != expected
    ]
    if report["status"] != case["expected_status"]:
        mismatches.append(f"status: expected {case['expected_status']}, got {report['status']}")

    if mismatches:
        print(f"❌ Case {case['name']} produced unexpected results:")
        for line in mismatches:
            print(f"   {line}")
        return False

    print(f"✅ Case {case['name']} COMPLETED successfully. Status: {report['status']} ({elapsed:.2f}s)")
    return True


if __name__ == "__main__":
    print("Starting End-to-End Test Suite...")

    outcomes = [run_test_case(case) for case in TEST_CASES]

    print("\n" + "="*50)
    print("End-to-End Test Suite FINISHED.")
    print("="*50)
    print(f"Passed: {sum(outcomes)}/{len(outcomes)}")

    raise SystemExit(0 if all(outcomes) else 1)
