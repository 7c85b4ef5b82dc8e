import os
import sys

# must precede the first numba import so 1, 4 and 8 worker counts are all selectable
os.environ.setdefault("NUMBA_NUM_THREADS", "8")

import pytest  # noqa: E402

from mwpdiv.corpus import ProblemRecord  # noqa: E402

TRAIN_POLE = [
    (100, 18, "What"), (100, 9, "What"), (108, 7, "Find"), (110, 9, "What"), (120, 12, "What"),
    (120, 18, "What"), (120, 9, "Find"), (126, 9, "Find"), (142, 12, "Find"), (162, 9, "Find"),
    (180, 18, "What"), (180, 36, "What"), (180, 7, "What"), (180, 8, "Find"), (180, 9, "Find"),
]

SANDWICH_BODY = ("A sandwich is priced at $0.75. A cup of pudding is priced at $0.25. "
                 "Tim bought 2 sandwiches and 4 cups of pudding.")
SANDWICH_QUESTION = "How much money should Tim pay?"


def train_pole_records():
    out = []
    for k, (speed, secs, verb) in enumerate(TRAIN_POLE):
        q = "What is the length of the train ?" if verb == "What" else "Find the length of the train ?"
        out.append(ProblemRecord(
            id=f"pole-{k:02d}",
            body=f"A train running at the speed of {speed} km/hr crosses a pole in {secs} seconds.",
            question=q,
        ))
    return out


def sandwich_record():
    return ProblemRecord(id="sandwich", body=SANDWICH_BODY, question=SANDWICH_QUESTION,
                         equations=("0.75 × 2 + 0.25 × 4 = 2.5",), answer="2.5 (dollars)")


@pytest.fixture
def train_pole():
    return train_pole_records()


@pytest.fixture
def sandwich():
    return sandwich_record()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
