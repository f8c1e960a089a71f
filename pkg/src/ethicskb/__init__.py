"""Toolkit for deontic research-ethics knowledge bases.

Three layers:

* ``ethicskb.kb`` -- load, validate, query and render decision trees whose
  leaves carry deontic verdicts (Permitted / Prohibited / Demanded / Gray /
  Recommended).
* ``ethicskb.observations`` + ``ethicskb.pipeline`` -- data model and
  three-stage scoring pipeline (raw / no out-of-scope / no redundancy) for
  comparing two sets of ethics observations.
* ``ethicskb.service`` -- HTTP session service for walking a tree
  question-by-question and exporting findings as an observation dataset.
"""

__version__ = "0.1.0"
