"""Document I/O, contracts, CSV export and the hierarchy check."""

import pytest

from ethicskb.errors import ContractError, CrossRefError, ParseError
from ethicskb.observations.io import (
    dataset_from_document,
    dataset_to_csv,
    dataset_to_document,
    grouping_from_document,
    grouping_to_document,
    hierarchy_check,
    mapping_from_document,
    mapping_to_document,
    votes_from_document,
    votes_to_document,
)
from ethicskb.observations.model import (
    Dataset,
    MappingLabel,
    MappingRecord,
    MappingSet,
    ObservationItem,
    SourceSet,
)


def _dataset_doc(source="E", items=None):
    return {
        "name": "demo", "source_set": source, "subject_paper": "census-2012",
        "items": items if items is not None else [],
    }


def _items(source, *ids, **extra):
    return [{"id": item_id, "source_set": source, "text": f"point {item_id}", **extra}
            for item_id in ids]


SECONDARY = dataset_from_document(_dataset_doc("T", _items("T", "t1", "t2", "t3")))


def test_empty_dataset_is_valid():
    dataset = dataset_from_document(_dataset_doc())
    assert dataset.items == []
    assert dataset.source_set is SourceSet.EXPERT


def test_census_fixture_sizes(census_bundle):
    assert len(census_bundle.dataset_e.items) == 41
    assert len(census_bundle.dataset_t.items) == 36


def test_duplicate_item_id_rejected():
    with pytest.raises(ContractError):
        dataset_from_document(_dataset_doc("E", _items("E", "e1", "e1")))


def test_kb_leaf_ref_only_on_tool_items():
    doc = _dataset_doc("E", [{"id": "e1", "source_set": "E", "text": "x",
                              "kb_leaf_ref": "L1"}])
    with pytest.raises(ContractError):
        dataset_from_document(doc)


def test_parent_must_exist_and_not_cycle():
    with pytest.raises(CrossRefError):
        dataset_from_document(
            _dataset_doc("E", [{"id": "e1", "source_set": "E", "text": "x",
                                "parent_id": "ghost"}])
        )
    with pytest.raises(ContractError):
        dataset_from_document(
            _dataset_doc("E", [
                {"id": "e1", "source_set": "E", "text": "x", "parent_id": "e2"},
                {"id": "e2", "source_set": "E", "text": "x", "parent_id": "e1"},
            ])
        )


def test_plus_alpha_without_refs_is_a_contract_error():
    primary = dataset_from_document(_dataset_doc("E", _items("E", "e1")))
    doc = {"primary_set": "E", "secondary_set": "T",
           "records": [{"primary_item": "e1", "label": "plus_alpha", "secondary_refs": []}]}
    with pytest.raises(ContractError):
        mapping_from_document(doc, primary, SECONDARY)


def test_unique_with_refs_is_a_contract_error():
    primary = dataset_from_document(_dataset_doc("E", _items("E", "e1")))
    doc = {"primary_set": "E", "secondary_set": "T",
           "records": [{"primary_item": "e1", "label": "unique", "secondary_refs": ["t1"]}]}
    with pytest.raises(ContractError):
        mapping_from_document(doc, primary, SECONDARY)


def test_mapping_must_cover_every_active_item():
    primary = dataset_from_document(_dataset_doc("E", _items("E", "e1", "e2")))
    doc = {"primary_set": "E", "secondary_set": "T",
           "records": [{"primary_item": "e1", "label": "unique", "secondary_refs": []}]}
    with pytest.raises(ContractError) as excinfo:
        mapping_from_document(doc, primary, SECONDARY)
    assert "e2" in str(excinfo.value)


def test_excluded_items_need_no_record():
    items = _items("E", "e1") + [{"id": "e9", "source_set": "E", "text": "faq point",
                                  "excluded": True}]
    primary = dataset_from_document(_dataset_doc("E", items))
    doc = {"primary_set": "E", "secondary_set": "T",
           "records": [{"primary_item": "e1", "label": "unique", "secondary_refs": []}]}
    mapping = mapping_from_document(doc, primary, SECONDARY)
    assert set(mapping.records) == {"e1"}


def test_unknown_secondary_ref_is_cross_ref_error():
    primary = dataset_from_document(_dataset_doc("E", _items("E", "e1")))
    doc = {"primary_set": "E", "secondary_set": "T",
           "records": [{"primary_item": "e1", "label": "shared", "secondary_refs": ["ghost"]}]}
    with pytest.raises(CrossRefError):
        mapping_from_document(doc, primary, SECONDARY)


def test_two_votes_is_a_contract_error():
    with pytest.raises(ContractError):
        votes_from_document({"records": [{"item": "e1", "votes": [True, False]}]})


def test_vote_for_unknown_item_is_cross_ref_error():
    dataset = dataset_from_document(_dataset_doc("E", _items("E", "e1")))
    with pytest.raises(CrossRefError):
        votes_from_document(
            {"records": [{"item": "ghost", "votes": [True, True, True]}]}, dataset
        )


def test_group_of_one_is_a_contract_error():
    dataset = dataset_from_document(_dataset_doc("E", _items("E", "e1", "e2")))
    with pytest.raises(ContractError):
        grouping_from_document({"dataset": "E", "groups": [["e1"]]}, dataset)


def test_grouping_unknown_member_is_cross_ref_error():
    dataset = dataset_from_document(_dataset_doc("E", _items("E", "e1", "e2")))
    with pytest.raises(CrossRefError):
        grouping_from_document({"dataset": "E", "groups": [["e1", "ghost"]]}, dataset)


def test_not_an_object_is_parse_error():
    with pytest.raises(ParseError):
        dataset_from_document([1, 2, 3])
    with pytest.raises(ParseError):
        votes_from_document({"records": "nope"})


def test_dataset_roundtrip(census_bundle):
    doc = dataset_to_document(census_bundle.dataset_e)
    assert dataset_from_document(doc) == census_bundle.dataset_e


def test_mapping_roundtrip(census_bundle):
    doc = mapping_to_document(census_bundle.mapping_e)
    again = mapping_from_document(doc, census_bundle.dataset_e, census_bundle.dataset_t)
    assert again == census_bundle.mapping_e


def test_votes_roundtrip(census_bundle):
    doc = votes_to_document(census_bundle.votes_e, SourceSet.EXPERT)
    assert votes_from_document(doc, census_bundle.dataset_e) == census_bundle.votes_e


def test_grouping_roundtrip(census_bundle):
    doc = grouping_to_document(census_bundle.grouping_e)
    again = grouping_from_document(doc, census_bundle.dataset_e)
    assert again == census_bundle.grouping_e


def test_csv_export_columns_and_rows():
    items = [
        {"id": "e1", "source_set": "E", "text": "plain point"},
        {"id": "e2", "source_set": "E", "text": "child, with a comma", "parent_id": "e1"},
    ]
    dataset = dataset_from_document(_dataset_doc("E", items))
    lines = dataset_to_csv(dataset).splitlines()
    assert lines[0] == "id,source_set,text,parent_id"
    assert lines[1] == "e1,E,plain point,"
    assert lines[2] == 'e2,E,"child, with a comma",e1'


def _mapping_for(labels: dict[str, MappingLabel]) -> MappingSet:
    records = {}
    for item_id, label in labels.items():
        refs = ("t1",) if label in (MappingLabel.PLUS_ALPHA, MappingLabel.SHARED) else ()
        records[item_id] = MappingRecord(primary_item=item_id, label=label,
                                         secondary_refs=refs)
    return MappingSet(primary_set=SourceSet.EXPERT, secondary_set=SourceSet.TOOL,
                      records=records)


def _family_dataset() -> Dataset:
    return Dataset(
        name="fam", source_set=SourceSet.EXPERT, subject_paper="x",
        items=[
            ObservationItem(id="p", source_set=SourceSet.EXPERT, text="parent"),
            ObservationItem(id="c1", source_set=SourceSet.EXPERT, text="kid",
                            parent_id="p"),
            ObservationItem(id="c2", source_set=SourceSet.EXPERT, text="kid",
                            parent_id="p"),
        ],
    )


def test_hierarchy_check_flat_dataset_is_quiet():
    dataset = dataset_from_document(_dataset_doc("E", _items("E", "e1", "e2")))
    assert hierarchy_check(dataset) == []


def test_hierarchy_check_warns_when_whole_family_scores():
    mapping = _mapping_for({"p": MappingLabel.UNIQUE, "c1": MappingLabel.UNIQUE,
                            "c2": MappingLabel.UNIQUE})
    warnings = hierarchy_check(_family_dataset(), mapping)
    assert len(warnings) == 1
    assert "'p'" in warnings[0]


def test_hierarchy_check_quiet_when_parent_is_shared():
    mapping = _mapping_for({"p": MappingLabel.SHARED, "c1": MappingLabel.UNIQUE,
                            "c2": MappingLabel.UNIQUE})
    assert hierarchy_check(_family_dataset(), mapping) == []
