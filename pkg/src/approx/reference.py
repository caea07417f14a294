"""Published values the approximation experiment is compared against."""

from typing import Dict, Tuple

# Degree-20 coefficient of normalized L1, keyed by (a, b), as printed: 0.ddd E-15
PUBLISHED_DEGREE_20: Dict[Tuple[int, int], str] = {
    (2, 3): "0.27327502044120918666E-15",
    (12, 17): "0.27632394776909554494E-15",
    (70, 99): "0.24164130261737767018E-15",
    (408, 577): "0.24708886190685028010E-15",
    (2378, 3363): "0.24708886190685028010E-15",
    (13860, 19601): "0.24709351973896486850E-15",
    (80782, 114243): "0.24709351400071579999E-15",
}

# Normalized series for 114243/80782 at order 10, powers x^0, x^2, ..., x^20
PUBLISHED_SERIES_114243: Dict[str, Tuple[str, ...]] = {
    "L1": (
        "1",
        "-1.3333333332822534857",
        "-0.27941176475495906369",
        "-0.17992011626456865856E-1",
        "-0.56399934990584172717E-3",
        "-0.10660593920209884517E-4",
        "-0.13660155439036212056E-6",
        "-0.12773250009420268932E-8",
        "-0.9172810105402920608E-11",
        "-0.5253788359821529842E-13",
        "-0.24709351400071579999E-15",
    ),
    "L2": (
        "0",
        "0.83333333328225349697",
        "0.71078431383315849009E-1",
        "0.18972403780540266659E-2",
        "0.26307421016151944601E-4",
        "0.23019494752812483754E-6",
        "0.14160103021824419386E-8",
        "0.6571055231725949143E-11",
        "0.24170000965421789288E-13",
        "0.7295669958800853034E-16",
        "0.18497349717353377031E-18",
    ),
}

# Wall time of the computer-algebra baseline for 114243/80782, seconds
BASELINE_SECONDS_114243 = 428.17
