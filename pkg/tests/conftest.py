"""Shared fixtures: the four worked 10-example models used across the suite."""

import numpy as np
import pytest

ACTUAL = [0.211, 2.725, 1.933, 3.242, 7.858, 6.061, 7.173, 3.082, 0.894, 1.203]

PREDICTED = {
    "m1": [-0.082, 3.323, 2.320, 1.080, 7.893, 4.983, 5.121, 3.442, 2.083, 1.112],
    "m2": [0.786, 2.078, 0.587, 1.676, 9.052, 5.875, 6.885, 3.038, 4.097, 0.308],
    "m3": [1.253, 4.232, 1.734, 5.325, 6.842, 9.325, 8.232, 3.525, 1.352, 1.778],
    "m4": [0.123, 1.221, 1.845, 4.573, 8.558, 7.392, 5.669, 1.578, 0.806, 1.245],
}


@pytest.fixture(scope="session")
def actual():
    return np.array(ACTUAL)


@pytest.fixture(scope="session")
def errors(actual):
    return {m: np.array(p) - actual for m, p in PREDICTED.items()}


@pytest.fixture(scope="session")
def points(errors):
    from rroc import over_under

    return {m: over_under(e) for m, e in errors.items() if m != "m4"}


@pytest.fixture()
def predictions_csv(tmp_path):
    """CSV with the three models sharing the common actual column."""
    lines = ["actual,predicted:m1,predicted:m2,predicted:m3"]
    for i in range(len(ACTUAL)):
        lines.append(
            f"{ACTUAL[i]},{PREDICTED['m1'][i]},{PREDICTED['m2'][i]},{PREDICTED['m3'][i]}"
        )
    path = tmp_path / "predictions.csv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
