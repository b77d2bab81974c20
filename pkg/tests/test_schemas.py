from __future__ import annotations

import json
from importlib import resources

import jsonschema
import pytest
from referencing import Registry, Resource

from interchange.bounds import bounds_report
from interchange.cli import cut_claims, embedding_claims, main, report_rows
from interchange.cuts import construct_3d
from interchange.embedding import EmbeddedGraph
from interchange.search import enumerate_min_genus
from interchange.transition import optimal_transition_graph, tg_to_voltage


def load(name: str) -> dict:
    return json.loads(resources.files("interchange").joinpath("schemas", f"{name}.schema.json").read_text())


NAMES = ["embedded_graph", "transition_graph", "voltage_graph", "cut_system", "search_result", "bounds_report", "report"]


def validator(name: str) -> jsonschema.Draft202012Validator:
    registry = Registry().with_resources(
        [(f"{n}.schema.json", Resource.from_contents(load(n))) for n in NAMES]
    )
    return jsonschema.Draft202012Validator(load(name), registry=registry)


@pytest.mark.parametrize("name", NAMES)
def test_schemas_are_valid(name):
    jsonschema.Draft202012Validator.check_schema(load(name))


def test_outputs_validate():
    for n in (3, 6, 15):
        tg = optimal_transition_graph(n)
        vg = tg_to_voltage(tg)
        validator("transition_graph").validate(tg.to_dict())
        validator("embedded_graph").validate(vg.base.to_dict())
        doc = vg.to_dict() | {"transition": tg.to_dict(), "claims": embedding_claims(vg)}
        validator("voltage_graph").validate(doc)
    for n in (2, 3, 4, 8, 9):
        cs = construct_3d(n)
        validator("cut_system").validate(cs.to_dict() | {"claims": cut_claims(cs)})
    validator("search_result").validate(enumerate_min_genus(5).to_dict())
    validator("bounds_report").validate([bounds_report(n).to_dict() for n in range(2, 40)])
    validator("report").validate(report_rows(range(2, 7), 5))


def test_cli_outputs_validate(tmp_path, capsys):
    cases = [
        (["construct", "--n", "7"], "voltage_graph"),
        (["construct", "--n", "7", "--format", "transition"], "transition_graph"),
        (["construct3d", "--n", "8"], "cut_system"),
        (["search", "--n", "4"], "search_result"),
        (["bounds", "--n", "2..12", "--format", "json"], "bounds_report"),
        (["report", "--n", "2..5", "--format", "json"], "report"),
    ]
    for argv, name in cases:
        assert main(argv) == 0
        validator(name).validate(json.loads(capsys.readouterr().out))


def test_schema_rejects_bad_document():
    bad = EmbeddedGraph.dipole([0, 1], [1, 0]).to_dict()
    bad["rotations"]["0"][0][1] = "middle"
    with pytest.raises(jsonschema.ValidationError):
        validator("embedded_graph").validate(bad)
