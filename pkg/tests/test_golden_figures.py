"""Golden fixtures: the worked examples must reproduce byte-exactly."""

from pathlib import Path

from qmajor.bijections import (
    inc_to_hook_syt,
    jdt_in,
    jdt_out,
    rectify_pair,
    rinc_to_inc,
    tableau_to_path,
)
from qmajor.paths import descent_set as word_descents
from qmajor.paths import standardize
from qmajor.tableaux import (
    Partition,
    Tableau,
    amajor_index,
    ascent_set,
    descent_set,
    major_index,
    reverse_tableaux,
)

GOLDEN = Path(__file__).parent / "golden"


def _check(name: str, text: str):
    expected = (GOLDEN / name).read_text(encoding="utf-8")
    assert text == expected, f"golden mismatch for {name}\n{text!r}\n{expected!r}"


def _fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def build_figure1() -> str:
    t1 = Tableau.from_string(". 2 3 4 / 1 2 3")
    t2 = Tableau.from_string(". 1 2 3 / 1 3 4")
    lines = [
        f"T1: {t1}",
        f"T1 descents: {_fmt_set(descent_set(t1))} maj: {major_index(t1)}",
        f"T1 ascents: {_fmt_set(ascent_set(t1))} amaj: {amajor_index(t1)}",
        f"T1 path: {tableau_to_path(t1).word} from ({tableau_to_path(t1).start_x},0)",
        f"T2: {t2}",
        f"T2 descents: {_fmt_set(descent_set(t2))} maj: {major_index(t2)}",
    ]
    return "\n".join(lines) + "\n"


def build_figure2() -> str:
    lines = [str(t) for t in reverse_tableaux(Partition((2, 2)), 3)]
    lines.append(f"count {len(lines)}")
    return "\n".join(lines) + "\n"


def build_standardization_example() -> str:
    word = (1, 2, 3, 2, 1, 4, 2, 3)
    std = standardize(word)
    lines = [
        "word: " + "".join(map(str, word)),
        "standardized: " + "".join(map(str, std)),
        f"descents: {_fmt_set(word_descents(std))}",
        f"descents preserved: {word_descents(std) == word_descents(word)}",
    ]
    return "\n".join(lines) + "\n"


def build_figure4() -> str:
    lines = []
    for label, text in (("T1", ". . 1 2 4 / 2 3 4 5"), ("T2", ". . 1 2 5 / 2 3 4 5")):
        t = Tableau.from_string(text)
        image = inc_to_hook_syt(t)
        lines.append(f"{label}: {t}")
        lines.append(f"extract({label}): {image}  shape {image.shape}")
    return "\n".join(lines) + "\n"


def build_figure5() -> str:
    t = Tableau.from_string("1 2 4 5 6 / 2 3 4 6")
    image = rinc_to_inc(t)
    lines = [
        f"T: {t}",
        f"repair(T): {image}  shape {image.shape}",
        f"maj: {major_index(t)} -> {major_index(image)}",
    ]
    return "\n".join(lines) + "\n"


def build_figure6() -> str:
    t = Tableau.from_string(". 1 3 8 / 2 4 7 / 5 6")
    inward = jdt_in(t, (1, 1))
    outward = jdt_out(t, (3, 3))
    lines = [
        f"T: {t}",
        f"slide in at (1,1): {inward}",
        f"slide out at (3,3): {outward}",
    ]
    return "\n".join(lines) + "\n"


def build_figure7() -> str:
    t = Tableau.from_string(". 1 4 5 / . 3 7 / 2 / 6")
    middle = jdt_in(t, (2, 1))
    image = rectify_pair(t)
    lines = [
        f"T: {t}",
        f"slide in at (2,1): {middle}",
        f"rectified: {image}  shape {image.shape}",
        f"descents: {_fmt_set(descent_set(t))} -> {_fmt_set(descent_set(image))}",
        f"maj: {major_index(t)} -> {major_index(image)}",
    ]
    return "\n".join(lines) + "\n"


def test_figure1_two_row_tableaux():
    _check("figure1.txt", build_figure1())


def test_figure2_reverse_tableaux():
    _check("figure2.txt", build_figure2())


def test_standardization_example():
    _check("standardization.txt", build_standardization_example())


def test_figure4_doubled_value_extraction():
    _check("figure4.txt", build_figure4())


def test_figure5_column_repair():
    _check("figure5.txt", build_figure5())


def test_figure6_jdt_slides():
    _check("figure6.txt", build_figure6())


def test_figure7_rectification():
    _check("figure7.txt", build_figure7())
