"""Command-line interface and the JSON file schema."""
from .main import build_parser, main, report_document, run_check
from .serialize import SCHEMA_VERSION, SchemaError, hopf_doc, hopf_from_doc, load, pair_doc, pair_from_doc
