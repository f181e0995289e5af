"""
Tests for the CSV/JSON emitters and the SVG contour plots.
"""

import csv
from io import StringIO

import numpy as np
import orjson
import pytest

from src.core.exceptions import InvalidParamsError, SchemaError
from src.io import (
    EXTRAPOLATED_HEADER,
    SWEEP_HEADER,
    contour_levels,
    marching_squares,
    read_contour_field,
    read_extrapolated_csv,
    read_sweep_csv,
    render_contour_svg,
    write_extrapolated_csv,
    write_point_csv,
    write_sweep_csv,
)
from src.io.csv_io import POINT_HEADER, format_float
from src.io.json_io import dumps, point_payload, sweep_payload
from src.schemas.params import HamiltonianParams
from src.schemas.records import QfiRecord
from src.services.qfi_service import evaluate_point
from src.sweep import ExtrapolatedGrid, sweep


@pytest.fixture(scope="module")
def small_grid():
    return sweep([0.0, 1.0, 2.5], [-2.0, 0.0, 3.0], eps=1.0, n_atoms=3)


def sweep_text(grid) -> str:
    stream = StringIO()
    write_sweep_csv(grid, stream)
    return stream.getvalue()


class TestSweepCsv:
    def test_header_and_row_order(self, small_grid):
        lines = sweep_text(small_grid).splitlines()
        assert lines[0] == "n_atoms,tau,eps,u,f_M,F_M,ell_max,ell_min"
        assert len(lines) == 1 + 9
        # u outer, tau inner
        coordinates = [tuple(line.split(",")[1:4:2]) for line in lines[1:4]]
        assert coordinates == [("0", "-2"), ("1", "-2"), ("2.5", "-2")]

    def test_read_back_bit_exact(self, small_grid):
        parsed = read_sweep_csv(StringIO(sweep_text(small_grid)))
        np.testing.assert_array_equal(parsed.values, small_grid.values)
        np.testing.assert_array_equal(parsed.fisher, small_grid.fisher)
        np.testing.assert_array_equal(parsed.ell_min, small_grid.ell_min)
        np.testing.assert_array_equal(parsed.tau_axis, small_grid.tau_axis)
        np.testing.assert_array_equal(parsed.u_axis, small_grid.u_axis)
        assert parsed.n_atoms == 3 and parsed.eps == 1.0

    def test_seventeen_digit_floats(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert float(format_float(1 / 3)) == 1 / 3

    def test_wrong_header(self):
        with pytest.raises(SchemaError):
            read_sweep_csv(StringIO("tau,u,f\n0,0,1\n"))

    def test_ragged_grid(self, small_grid):
        lines = sweep_text(small_grid).splitlines()
        del lines[5]
        with pytest.raises(SchemaError):
            read_sweep_csv(StringIO("\n".join(lines) + "\n"))

    def test_non_numeric_field(self, small_grid):
        text = sweep_text(small_grid).replace(",1,", ",one,", 1)
        with pytest.raises(SchemaError):
            read_sweep_csv(StringIO(text))

    @pytest.mark.parametrize("text", ["nan", "inf", "-inf"])
    def test_non_finite_value(self, small_grid, text):
        lines = sweep_text(small_grid).splitlines()
        fields = lines[1].split(",")
        fields[SWEEP_HEADER.index("f_M")] = text
        lines[1] = ",".join(fields)
        with pytest.raises(SchemaError):
            read_sweep_csv(StringIO("\n".join(lines) + "\n"))

    def test_empty_grid(self):
        with pytest.raises(SchemaError):
            read_sweep_csv(StringIO(",".join(SWEEP_HEADER) + "\n"))

    def test_mixed_atom_numbers(self):
        rows = ["2,0,1,0,1,4,1,-1", "3,1,1,0,0.9,8,1.4,-1.4"]
        with pytest.raises(SchemaError):
            read_sweep_csv(StringIO("\n".join([",".join(SWEEP_HEADER), *rows]) + "\n"))


class TestOtherCsv:
    def test_point_row(self):
        record = QfiRecord.from_point(
            evaluate_point(HamiltonianParams(tau=0.0, eps=1.0, u=0.0, n_atoms=2)), include_state=False
        )
        stream = StringIO()
        write_point_csv(record, stream)
        header, row = list(csv.reader(StringIO(stream.getvalue())))
        assert header == POINT_HEADER
        values = dict(zip(header, row))
        assert values["n_atoms"] == "2"
        assert float(values["F_M"]) == pytest.approx(4.0)
        assert float(values["sigma"]) == pytest.approx(0.5)

    def test_extrapolated_round_trip(self):
        grid = ExtrapolatedGrid(
            tau_axis=np.array([0.0, 1.0]),
            u_axis=np.array([2.0]),
            eps=1.0,
            n_series=(8, 16, 32),
            f_infinity=np.array([[1.0, 0.8123456789012345]]),
            error_estimate=np.array([[0.0, 3.2e-5]]),
        )
        stream = StringIO()
        write_extrapolated_csv(grid, stream)
        assert stream.getvalue().splitlines()[0] == ",".join(EXTRAPOLATED_HEADER)
        parsed = read_extrapolated_csv(StringIO(stream.getvalue()), n_series=(8, 16, 32))
        np.testing.assert_array_equal(parsed.f_infinity, grid.f_infinity)
        assert parsed.n_series == (8, 16, 32)

    def test_contour_field_detects_schema(self, small_grid):
        tau, u, values, field = read_contour_field(StringIO(sweep_text(small_grid)))
        assert field == "f_M"
        np.testing.assert_array_equal(values, small_grid.values)
        with pytest.raises(SchemaError):
            read_contour_field(StringIO("a,b\n1,2\n"))


class TestJson:
    def test_sweep_json_agrees_with_csv(self, small_grid):
        payload = orjson.loads(dumps(sweep_payload(small_grid)))
        csv_rows = list(csv.DictReader(StringIO(sweep_text(small_grid))))
        assert len(payload["rows"]) == len(csv_rows)
        for json_row, csv_row in zip(payload["rows"], csv_rows):
            for name in SWEEP_HEADER:
                assert float(json_row[name]) == float(csv_row[name])
        assert payload["tau_axis"] == [0.0, 1.0, 2.5]

    def test_point_json_carries_state_pairs(self, generic_params):
        record = QfiRecord.from_point(evaluate_point(generic_params))
        payload = orjson.loads(dumps(point_payload(record)))
        assert len(payload["optimal_state"]) == generic_params.n_atoms + 1
        norm = sum(re**2 + im**2 for re, im in payload["optimal_state"])
        assert norm == pytest.approx(1.0)
        assert payload["U"] == pytest.approx(0.25)

    def test_output_ends_with_newline(self):
        assert dumps({"a": 1}).endswith(b"\n")


class TestContourLevels:
    def test_interior_multiples(self):
        assert contour_levels(np.array([[0.0, 0.35]]), 0.1) == [0.1, 0.2, 0.3]

    def test_extremes_excluded(self):
        assert contour_levels(np.array([[0.2, 0.4]]), 0.1) == [0.3]

    def test_constant_field(self):
        assert contour_levels(np.ones((3, 3)), 0.1) == []

    def test_non_finite_field(self):
        with pytest.raises(SchemaError):
            contour_levels(np.array([[0.0, np.nan], [0.5, 1.0]]), 0.1)

    def test_spacing_must_be_positive(self):
        with pytest.raises(InvalidParamsError):
            contour_levels(np.ones((2, 2)), 0.0)


class TestMarchingSquares:
    def test_straight_line_between_levels(self):
        lines = marching_squares(np.array([0.0, 1.0]), np.array([0.0, 2.0]), np.array([[0.0, 0.0], [1.0, 1.0]]), 0.5)
        assert len(lines) == 1
        assert sorted(lines[0]) == [(0.0, 1.0), (1.0, 1.0)]

    def test_closed_loop_around_peak(self):
        values = np.zeros((3, 3))
        values[1, 1] = 1.0
        axis = np.array([0.0, 1.0, 2.0])
        (loop,) = marching_squares(axis, axis, values, 0.5)
        assert loop[0] == loop[-1]
        assert len(loop) == 5
        assert set(loop) == {(0.5, 1.0), (1.0, 0.5), (1.5, 1.0), (1.0, 1.5)}

    def test_saddle_gives_two_segments(self):
        values = np.array([[1.0, 0.0], [0.0, 1.0]])
        lines = marching_squares(np.array([0.0, 1.0]), np.array([0.0, 1.0]), values, 0.5)
        assert len(lines) == 2
        assert all(len(line) == 2 for line in lines)

    def test_shape_mismatch(self):
        with pytest.raises(SchemaError):
            marching_squares(np.array([0.0, 1.0]), np.array([0.0]), np.zeros((2, 2)), 0.5)


class TestContourSvg:
    def test_constant_grid_has_no_contours(self):
        svg = render_contour_svg(np.array([0.0, 1.0]), np.array([0.0, 1.0]), np.ones((2, 2)))
        assert "<polyline" not in svg
        assert 'class="contour"' not in svg

    def test_single_level_family(self):
        svg = render_contour_svg(
            np.array([0.0, 1.0, 2.0]), np.array([0.0, 1.0]), np.array([[0.0, 0.0, 0.0], [1.0, 1.0, 1.0]]), spacing=0.5
        )
        assert svg.count('<g class="contour"') == 1
        assert 'data-level="0.5"' in svg
        assert svg.count("<polyline") == 1

    def test_axis_labels(self, small_grid):
        svg = render_contour_svg(small_grid.tau_axis, small_grid.u_axis, small_grid.values)
        assert ">τ</text>" in svg
        assert ">u</text>" in svg
        assert svg.startswith("<?xml")

    def test_deterministic(self, small_grid):
        first = render_contour_svg(small_grid.tau_axis, small_grid.u_axis, small_grid.values)
        second = render_contour_svg(small_grid.tau_axis, small_grid.u_axis, small_grid.values)
        assert first == second

    def test_needs_two_points_per_axis(self):
        with pytest.raises(SchemaError):
            render_contour_svg(np.array([0.0]), np.array([0.0, 1.0]), np.zeros((2, 1)))
