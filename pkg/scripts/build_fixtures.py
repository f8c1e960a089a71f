"""Regenerate the shipped fixture trees and comparison bundles.

The two bundles (census, encore) are synthetic item-level datasets whose
stage-by-stage aggregates are pinned to the reference table in
tests/test_acceptance.py. The script validates everything it writes by
loading the documents back and running the pipeline, so a regeneration
that drifts from the reference counts fails loudly.

Usage: python scripts/build_fixtures.py [output_dir]   (default: fixtures/)
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from ethicskb.kb.loader import tree_from_document
from ethicskb.observations.io import (
    dataset_from_document,
    grouping_from_document,
    mapping_from_document,
    votes_from_document,
)
from ethicskb.pipeline.run import ComparisonBundle, run_pipeline

CENSUS_MINI = {
    "name": "census-mini",
    "version": "1",
    "root": "Q1",
    "nodes": [
        {
            "id": "Q1",
            "question": "Does the action collect device identifiers?",
            "branches": [
                {"answer": "MAC addresses", "child": "M1"},
                {"answer": "IP addresses tied to persons", "child": "M2"},
                {"answer": "no identifiers", "child": "M3"},
            ],
        }
    ],
    "leaves": [
        {
            "id": "M1",
            "verdict": "gray",
            "statement": "Collecting {answers} of devices is a {verdict} action",
            "provenance": "literature",
            "refs": ["practice-survey/device-identifiers"],
        },
        {
            "id": "M2",
            "verdict": "gray",
            "statement": "Collecting {answers} is a {verdict} action when they identify persons",
            "provenance": "literature",
            "refs": ["practice-survey/personal-data"],
        },
        {
            "id": "M3",
            "verdict": "permitted",
            "statement": "Collecting no device identifiers",
            "provenance": "literature",
            "refs": [],
        },
    ],
}

_NODES = [
    (
        "N0",
        "What does the research activity primarily involve?",
        [
            ("collecting data about computer systems", "N1"),
            ("interacting with human subjects or their devices", "N2"),
            ("deploying experiment software on third-party systems", "N3"),
            ("storing or publishing collected data", "N4"),
        ],
    ),
    (
        "N1",
        "What is collected?",
        [
            ("device identifiers such as MAC addresses", "N1a"),
            ("service banners from public scans", "L03"),
            ("more data than the experiment requires", "L04"),
        ],
    ),
    (
        "N1a",
        "Can the identifiers be linked to owners?",
        [
            ("linkable to device owners", "L01"),
            ("aggregated or truncated before storage", "L02"),
        ],
    ),
    (
        "N2",
        "How are subjects involved?",
        [
            ("subjects must use personal devices or accounts", "L05"),
            ("subjects contribute paid or crowd-sourced work", "L06"),
            ("subjects are not told data is being collected", "N2a"),
        ],
    ),
    (
        "N2a",
        "Is the collected data solely about computer systems?",
        [
            ("the data concerns the people themselves", "L07"),
            ("the data is solely about computer systems", "L08"),
        ],
    ),
    (
        "N3",
        "Which deployment practice applies?",
        [
            ("the program spreads itself to further devices", "N3a"),
            ("experiment traffic could be taken for an attack", "L11"),
            ("external networks are scanned at scale", "L12"),
            ("the software ships without prior verification", "L13"),
        ],
    ),
    (
        "N3a",
        "Was consent obtained from the device owners?",
        [
            ("consent was obtained", "L09"),
            ("no consent was obtained", "L10"),
        ],
    ),
    (
        "N4",
        "Which data handling practice applies?",
        [
            ("system data is retained in identifiable form", "L14"),
            ("data moves between collection and storage sites", "L15"),
            ("data is kept after the analysis completes", "L16"),
            ("publication or reuse of the data is planned", "N4a"),
        ],
    ),
    (
        "N4a",
        "What governs the publication or reuse?",
        [
            ("third parties will reuse the data", "L17"),
            ("only institutional review board approval applies", "L18"),
        ],
    ),
]

_LEAVES = [
    ("L01", "gray", "Collecting identifiers linkable to device owners", "literature"),
    ("L02", "permitted", "Collecting aggregated or truncated device identifiers", "literature"),
    ("L03", "permitted", "Collecting service banners exposed to the public internet", "literature"),
    ("L04", "demanded", "Feasibly minimize data collected/stored", "literature"),
    ("L05", "gray", "Requiring participants to use personal devices or accounts", "literature"),
    ("L06", "demanded", "Fairly compensate subjects, including crowd-sourced workers", "literature"),
    ("L07", "prohibited", "Collecting personal data through a service not declared for it", "literature"),
    ("L08", "permitted", "Collecting system-only data through a separate service", "literature"),
    ("L09", "gray", "Distributing self-propagating software with owner consent", "literature"),
    ("L10", "prohibited", "Installing or executing software on systems without consent", "literature"),
    ("L11", "recommended", "Ensure traffic your assets send during research is not malicious", "literature"),
    ("L12", "demanded", "Coordinate closely with network administrators to reduce risks", "literature"),
    ("L13", "recommended", "Test software for bugs, consistency and safety before deployment", "literature"),
    ("L14", "demanded", "Pseudonymize, anonymize, or aggregate collected system data", "literature"),
    ("L15", "recommended", "Encrypt collected data in transit", "standards"),
    ("L16", "recommended", "Delete data as soon as possible after use", "literature"),
    ("L17", "recommended", "Sign research agreements limiting data use to the experiment", "standards"),
    ("L18", "prohibited", "Adhering to review-board rules while ignoring other ethics standards", "standards"),
]

ETHICS_PRACTICES = {
    "name": "ethics-practices",
    "version": "1",
    "root": "N0",
    "nodes": [
        {
            "id": node_id,
            "question": question,
            "branches": [{"answer": answer, "child": child} for answer, child in branches],
        }
        for node_id, question, branches in _NODES
    ],
    "leaves": [
        {
            "id": leaf_id,
            "verdict": verdict,
            "statement": statement,
            "provenance": provenance,
            "refs": [f"practice-survey/{leaf_id.lower()}"],
        }
        for leaf_id, verdict, statement, provenance in _LEAVES
    ],
}

_E_THEMES = [
    "unauthorized access to third-party devices",
    "release of raw collected data to the public",
    "absence of informed consent from affected parties",
    "burden placed on constrained devices by experiment traffic",
    "retention of credentials discovered during the experiment",
    "risk of exposing vulnerable hosts to other actors",
    "lack of coordination with network operators",
    "equitable treatment of secondary stakeholders",
    "responsibility for downstream use of the published data",
    "transparency about the experiment's methods",
    "deception of users about what is collected",
    "possible legal exposure of unaware participants",
]

_E_NOISE_THEMES = [
    "overview of the measurement architecture",
    "summary of the dataset format and size",
    "timeline of the experiment campaign",
    "restatement of a general ethics principle",
    "background on prior measurement studies",
    "technical description of the client software",
]

_T_THEMES = [
    "minimize the data collected and stored",
    "coordinate scanning with network administrators",
    "test the software for safety before deployment",
    "anonymize or aggregate collected system data",
    "encrypt collected data while in transit",
    "delete data as soon as possible after use",
    "compensate subjects for their contributions",
    "obtain consent before installing software",
    "limit data use through research agreements",
    "avoid sending traffic that could be taken for an attack",
    "separate human-subject data from system data",
    "prefer aggregated identifiers over linkable ones",
]

# Leaf ids of ethics-practices, used for kb_leaf_ref on T items.
_LEAF_IDS = [leaf_id for leaf_id, _, _, _ in _LEAVES]


def _item_id(prefix: str, index: int) -> str:
    return f"{prefix}-{index:02d}"


def _build_dataset(prefix: str, source_set: str, subject: str, name: str,
                   total: int, noise_start: int | None, excluded_ids: list[str]) -> dict:
    """Items 1..total; ids >= noise_start draw from the noise theme pool."""
    items = []
    for index in range(1, total + 1):
        if source_set == "E":
            if noise_start is not None and index >= noise_start:
                theme = _E_NOISE_THEMES[(index - noise_start) % len(_E_NOISE_THEMES)]
            else:
                theme = _E_THEMES[(index - 1) % len(_E_THEMES)]
            text = f"Critique observation {index:02d}: {theme}"
            entry = {"id": _item_id(prefix, index), "source_set": "E", "text": text}
        else:
            theme = _T_THEMES[(index - 1) % len(_T_THEMES)]
            text = f"Walkthrough finding {index:02d}: {theme}"
            entry = {
                "id": _item_id(prefix, index),
                "source_set": "T",
                "text": text,
                "kb_leaf_ref": _LEAF_IDS[(index - 1) % len(_LEAF_IDS)],
            }
        items.append(entry)
    for excluded_id in excluded_ids:
        items.append(
            {
                "id": excluded_id,
                "source_set": source_set,
                "text": "Observation sourced from the project FAQ, outside the paper",
                "excluded": True,
            }
        )
    return {"name": name, "source_set": source_set, "subject_paper": subject, "items": items}


def _build_mapping(prefix: str, primary: str, secondary: str,
                   ranges: dict[str, tuple[int, int]], secondary_ids: list[str]) -> dict:
    records = []
    ref_cursor = 0
    for label, (lo, hi) in ranges.items():
        for index in range(lo, hi + 1):
            record = {
                "primary_item": _item_id(prefix, index),
                "label": label,
                "secondary_refs": [],
            }
            if label in ("plus_alpha", "shared"):
                refs = [secondary_ids[ref_cursor % len(secondary_ids)]]
                if index % 3 == 0:
                    extra = secondary_ids[(ref_cursor + 7) % len(secondary_ids)]
                    if extra not in refs:
                        refs.append(extra)
                ref_cursor += 1
                record["secondary_refs"] = refs
            records.append(record)
    records.sort(key=lambda r: r["primary_item"])
    return {"primary_set": primary, "secondary_set": secondary, "records": records}


def _votes(dataset: str, records: list[tuple[str, list[bool]]]) -> dict:
    return {
        "dataset": dataset,
        "records": [{"item": item, "votes": votes} for item, votes in records],
    }


def _grouping(dataset: str, groups: list[list[str]]) -> dict:
    return {"dataset": dataset, "groups": groups}


def _ids(prefix: str, *indexes: int) -> list[str]:
    return [_item_id(prefix, index) for index in indexes]


def build_census() -> dict[str, dict]:
    e_ids = [_item_id("ce", i) for i in range(1, 42)]
    t_ids = [_item_id("ct", i) for i in range(1, 37)]
    docs = {
        "dataset_e.json": _build_dataset(
            "ce", "E", "census-2012", "census-expert-critique", 41, 27, []
        ),
        "dataset_t.json": _build_dataset(
            "ct", "T", "census-2012", "census-kb-walkthrough", 36, None, []
        ),
        "mapping_e_to_t.json": _build_mapping(
            "ce", "E", "T",
            {"unique": (1, 10), "plus_alpha": (11, 19), "shared": (20, 26), "out_of_scope": (27, 41)},
            t_ids,
        ),
        "mapping_t_to_e.json": _build_mapping(
            "ct", "T", "E",
            {"unique": (1, 19), "plus_alpha": (20, 35), "shared": (36, 36)},
            e_ids,
        ),
        "votes_e.json": _votes(
            "E",
            [
                ("ce-01", [True, True, True]),
                ("ce-09", [False, False, True]),
                ("ce-10", [False, False, False]),
                ("ce-11", [True, False, True]),
                ("ce-19", [False, True, False]),
                # labeler said out-of-scope; an in-scope majority does not override
                ("ce-27", [True, True, False]),
                ("ce-28", [True, True, True]),
            ],
        ),
        "votes_t.json": _votes(
            "T",
            [("ct-01", [True, True, True]), ("ct-20", [True, True, True])],
        ),
        "grouping_e.json": _grouping(
            "E",
            [
                _ids("ce", 1, 2),
                _ids("ce", 3, 4, 5),
                _ids("ce", 6, 20),
                _ids("ce", 11, 12),
                _ids("ce", 13, 14, 15),
                _ids("ce", 16, 21, 22),
                _ids("ce", 17, 18),
            ],
        ),
        "grouping_t.json": _grouping(
            "T",
            [
                _ids("ct", 1, 2, 3, 4),
                _ids("ct", 5, 6, 7),
                _ids("ct", 8, 9),
                _ids("ct", 10, 11),
                _ids("ct", 20, 21, 22),
                _ids("ct", 23, 24),
                _ids("ct", 25, 26),
            ],
        ),
    }
    return docs


def build_encore() -> dict[str, dict]:
    e_ids = [_item_id("ee", i) for i in range(1, 82)]
    t_ids = [_item_id("et", i) for i in range(1, 35)]
    docs = {
        "dataset_e.json": _build_dataset(
            "ee", "E", "encore", "encore-expert-critique", 81, 42, ["ee-x1", "ee-x2"]
        ),
        "dataset_t.json": _build_dataset(
            "et", "T", "encore", "encore-kb-walkthrough", 34, None, []
        ),
        "mapping_e_to_t.json": _build_mapping(
            "ee", "E", "T",
            {"unique": (1, 7), "plus_alpha": (8, 20), "shared": (21, 41), "out_of_scope": (42, 81)},
            t_ids,
        ),
        "mapping_t_to_e.json": _build_mapping(
            "et", "T", "E",
            {"unique": (1, 20), "plus_alpha": (21, 25), "shared": (26, 34)},
            e_ids,
        ),
        "votes_e.json": _votes(
            "E",
            [
                ("ee-01", [True, True, True]),
                ("ee-02", [False, False, False]),
                ("ee-03", [False, True, False]),
                ("ee-04", [False, False, True]),
                ("ee-05", [False, False, False]),
                ("ee-06", [True, False, False]),
                ("ee-07", [False, False, False]),
                ("ee-20", [False, False, True]),
                ("ee-38", [False, True, False]),
                ("ee-39", [False, False, False]),
                ("ee-40", [False, False, True]),
                ("ee-41", [False, False, False]),
                ("ee-42", [False, False, False]),
            ],
        ),
        "votes_t.json": _votes("T", [("et-01", [True, True, True])]),
        "grouping_e.json": _grouping(
            "E",
            [
                _ids("ee", 1, 21, 22, 8, 9, 10, 11, 12),
                _ids("ee", 13, 14, 15, 16, 17, 23, 24),
                _ids("ee", 25, 26),
                _ids("ee", 27, 28),
                _ids("ee", 29, 30),
                _ids("ee", 31, 32),
            ],
        ),
        "grouping_t.json": _grouping(
            "T",
            [
                _ids("et", 1, 26),
                _ids("et", 2, 27),
                _ids("et", 3, 4, 5, 6),
                _ids("et", 7, 8, 9, 10),
                _ids("et", 28, 29),
            ],
        ),
    }
    return docs


# Reference aggregates each bundle must reproduce, per stage and side:
# (unique, plus_alpha, shared, out_of_scope, output item count)
REFERENCE = {
    "census": {
        "raw": {"E": (10, 9, 7, 15, 41), "T": (19, 16, 1, 0, 36)},
        "no_out_of_scope": {"E": (8, 8, 7, 18, 41), "T": (19, 16, 1, 0, 36)},
        "no_redundancy": {"E": (4, 5, 4, 18, 31), "T": (12, 12, 1, 0, 25)},
    },
    "encore": {
        "raw": {"E": (7, 13, 21, 40, 81), "T": (20, 5, 9, 0, 34)},
        "no_out_of_scope": {"E": (1, 12, 17, 51, 81), "T": (20, 5, 9, 0, 34)},
        "no_redundancy": {"E": (0, 4, 9, 51, 64), "T": (12, 7, 6, 0, 25)},
    },
}


def _verify_bundle(name: str, docs: dict[str, dict]) -> None:
    dataset_e = dataset_from_document(docs["dataset_e.json"])
    dataset_t = dataset_from_document(docs["dataset_t.json"])
    bundle = ComparisonBundle(
        name=name,
        dataset_e=dataset_e,
        dataset_t=dataset_t,
        mapping_e=mapping_from_document(docs["mapping_e_to_t.json"], dataset_e, dataset_t),
        mapping_t=mapping_from_document(docs["mapping_t_to_e.json"], dataset_t, dataset_e),
        votes_e=votes_from_document(docs["votes_e.json"], dataset_e),
        votes_t=votes_from_document(docs["votes_t.json"], dataset_t),
        grouping_e=grouping_from_document(docs["grouping_e.json"], dataset_e),
        grouping_t=grouping_from_document(docs["grouping_t.json"], dataset_t),
    )
    table = run_pipeline(bundle)
    for result in table.stages:
        for side, side_stage in (("E", result.e), ("T", result.t)):
            counts = side_stage.counts
            got = (
                counts.unique,
                counts.plus_alpha,
                counts.shared,
                counts.out_of_scope,
                len(side_stage.items),
            )
            expected = REFERENCE[name][result.stage.value][side]
            if got != expected:
                raise SystemExit(
                    f"{name}/{result.stage.value}/{side}: built {got}, expected {expected}"
                )


def main(output_dir: str | None = None) -> None:
    root = Path(output_dir) if output_dir else Path(__file__).resolve().parent.parent / "fixtures"

    for doc in (CENSUS_MINI, ETHICS_PRACTICES):
        tree_from_document(doc)  # raises if the fixture tree is invalid
    kb_dir = root / "kb"
    kb_dir.mkdir(parents=True, exist_ok=True)
    for doc in (CENSUS_MINI, ETHICS_PRACTICES):
        path = kb_dir / f"{doc['name']}.json"
        path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        print(f"wrote {path}")

    for name, docs in (("census", build_census()), ("encore", build_encore())):
        _verify_bundle(name, docs)
        bundle_dir = root / name
        bundle_dir.mkdir(parents=True, exist_ok=True)
        for filename, doc in docs.items():
            path = bundle_dir / filename
            path.write_text(
                json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
            )
            print(f"wrote {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
