import json

import pytest
from hypothesis import given, settings, strategies as st

from mwpdiv.corpus import Category, Corpus, ProblemRecord
from mwpdiv.ingestion import (InputError, load_asdiv, load_canonical, load_corpus, load_mathqa,
                              parse_options, save_canonical)


def write_lines(path, objs):
    path.write_text("".join((o if isinstance(o, str) else json.dumps(o)) + "\n" for o in objs))
    return path


class TestCanonical:
    def test_order_preserved(self, tmp_path):
        p = write_lines(tmp_path / "c.jsonl", [{"id": i, "body": "b"} for i in "abc"])
        assert [r.id for r in load_canonical(p)] == ["a", "b", "c"]

    def test_missing_body(self, tmp_path):
        p = write_lines(tmp_path / "c.jsonl", [{"id": "a", "body": "b"}, {"id": "b"}])
        with pytest.raises(InputError, match="line 2: missing field body"):
            load_canonical(p)

    def test_duplicate_id(self, tmp_path):
        p = write_lines(tmp_path / "c.jsonl", [{"id": "a", "body": "x"}, {"id": "b", "body": "x"},
                                               {"id": "a", "body": "x"}])
        with pytest.raises(InputError, match="'a'"):
            load_canonical(p)

    def test_malformed_line(self, tmp_path):
        p = write_lines(tmp_path / "c.jsonl", [{"id": "a", "body": "x"}, "{not json"])
        with pytest.raises(InputError, match="line 2"):
            load_canonical(p)

    def test_unknown_keys_warn(self, tmp_path):
        p = write_lines(tmp_path / "c.jsonl", [{"id": "a", "body": "x", "colour": "red"}])
        warnings = []
        load_canonical(p, warnings)
        assert warnings and "colour" in warnings[0]

    def test_blank_lines_skipped(self, tmp_path):
        p = tmp_path / "c.jsonl"
        p.write_text('{"id": "a", "body": "x"}\n\n{"id": "b", "body": "y"}\n')
        assert len(load_canonical(p)) == 2

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(
        st.text(min_size=1, max_size=10), st.text(max_size=20), st.text(max_size=10),
        st.sampled_from([None, "Addition", "physics"]), st.one_of(st.none(), st.integers(1, 6)),
        st.sampled_from(["eq", "formula", "none"]),
    ), max_size=8, unique_by=lambda t: t[0]))
    def test_round_trip(self, tmp_path_factory, rows):
        records = []
        for pid, body, answer, ptype, grade, kind in rows:
            records.append(ProblemRecord(
                id=pid, body=body, question="q?", answer=answer, problem_type=ptype, grade=grade,
                equations=("x = 1 + 2",) if kind == "eq" else (),
                formula="add(n0,n1)" if kind == "formula" else None,
                source="s",
            ))
        corpus = Corpus("rt", tuple(records))
        path = tmp_path_factory.mktemp("rt") / "rt.jsonl"
        save_canonical(corpus, path)
        assert load_canonical(path).problems == corpus.problems


ASDIV = """<?xml version="1.0" encoding="UTF-8"?>
<Machine-Reading-Corpus-File>
<ProblemSet>
<Problem ID="nluds-0001" Grade="1" Source="http://www.k5learning.com">
<Body>Seven red apples and two green apples are in the basket.</Body>
<Question>How many apples are in the basket?</Question>
<Solution-Type>Addition</Solution-Type>
<Answer>9 (apples)</Answer>
<Formula>7+2=9</Formula>
</Problem>
<Problem ID="nluds-0002" Grade="6" Source="x">
<Body>They served a total of 179 adults and 141 children, if 156 of all the people they served are male,</Body>
<Question>how many are female?</Question>
<Solution-Type>Multi-Step</Solution-Type>
<Answer>164 (people)</Answer>
<Formula>x=(179+141)-156</Formula>
</Problem>
</ProblemSet>
</Machine-Reading-Corpus-File>
"""


class TestAsdiv:
    def test_fields(self, tmp_path):
        p = tmp_path / "ASDiv.xml"
        p.write_text(ASDIV)
        c = load_asdiv(p)
        assert len(c) == 2
        a, b = c.problems
        assert a.grade == 1 and a.answer == "9 (apples)" and a.equations == ("7+2=9",)
        assert b.grade == 6
        assert b.problem_type.name == "Multi-Step"
        assert b.problem_type.category is Category.BASIC_ARITHMETIC

    def test_structural_error_names_element(self, tmp_path):
        p = tmp_path / "bad.xml"
        p.write_text(ASDIV.replace("<Answer>164 (people)</Answer>", ""))
        with pytest.raises(InputError, match="nluds-0002"):
            load_asdiv(p)

    def test_not_xml(self, tmp_path):
        p = tmp_path / "bad.xml"
        p.write_text("<Problem")
        with pytest.raises(InputError):
            load_asdiv(p)


MATHQA = [
    {"Problem": "9886 + x = 13200 , then x is ?", "Rationale": "", "options":
     "a ) 3327 , b ) 3237 , c ) 3337 , d ) 2337 , e ) none of these", "correct": "e",
     "annotated_formula": "subtract(n1, n0)", "linear_formula": "subtract(n1,n0)|", "category": "general"},
    {"Problem": "the lcm of two numbers is 495 and their hcf is 5 .", "options": "a ) 10 , b ) 20",
     "correct": "a", "annotated_formula": "divide(multiply(n0, n1), n2)", "category": "other"},
    {"Problem": "broken", "options": "a ) 1 , b ) 2", "correct": "z", "linear_formula": "add(n0,n1)|"},
]


class TestMathqa:
    def load(self, tmp_path, warnings=None):
        p = tmp_path / "train.json"
        p.write_text(json.dumps(MATHQA))
        return load_mathqa(p, warnings)

    def test_formula_and_answer(self, tmp_path):
        c = self.load(tmp_path)
        first = c.problems[0]
        assert first.formula == "subtract(n1,n0)|"
        assert first.answer == "none of these"
        assert first.problem_type.name == "general" and first.problem_type.is_extension

    def test_annotated_formula_fallback(self, tmp_path):
        assert self.load(tmp_path).problems[1].formula == "divide(multiply(n0, n1), n2)"

    def test_bad_letter_warns(self, tmp_path):
        warnings = []
        c = self.load(tmp_path, warnings)
        assert c.problems[2].answer == ""
        assert any("'z'" in w for w in warnings)

    def test_parse_options(self):
        assert parse_options("a ) 3327 , b ) 3237 , e ) none of these") == {
            "a": "3327", "b": "3237", "e": "none of these"}
        assert parse_options(["a ) 1", "b ) 2 : 3"]) == {"a": "1", "b": "2 : 3"}

    def test_load_corpus_dispatch(self, tmp_path):
        p = tmp_path / "train.json"
        p.write_text(json.dumps(MATHQA))
        assert len(load_corpus(p, "mathqa")) == 3
        with pytest.raises(ValueError):
            load_corpus(p, "nope")
