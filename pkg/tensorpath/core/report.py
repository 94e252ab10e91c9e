import csv
import io
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from tensorpath._version import __version__
from tensorpath.config.models import OutputConfig


def to_json_filter(value) -> str:
    """Compact JSON with sorted keys, stable across runs."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


template_dir = os.path.join(os.path.dirname(__file__), '..', 'templates')
jinja_env = Environment(
    loader=FileSystemLoader(template_dir),
    autoescape=select_autoescape(['html', 'xml']),
    trim_blocks=True,
    lstrip_blocks=True,
)
jinja_env.filters['to_json'] = to_json_filter


class Report(NamedTuple):
    command: str
    spec: Dict[str, Any]
    constants: Dict[str, str]
    columns: List[str]
    rows: List[Dict[str, Any]]


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_header(report: Report) -> str:
    template = jinja_env.get_template("csv_header.j2")
    return template.render(
        version=__version__,
        command=report.command,
        spec=report.spec,
        constants=report.constants,
    )


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    buffer.write(render_header(report))
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([format_cell(row.get(c)) for c in report.columns])
    return buffer.getvalue()


def render_json(report: Report) -> str:
    document = {
        "meta": {
            "tool": "tensorpath",
            "version": __version__,
            "command": report.command,
            "spec": report.spec,
            "constants": report.constants,
            "columns": report.columns,
        },
        "rows": [{c: row.get(c) for c in report.columns} for row in report.rows],
    }
    return json.dumps(document, indent=2, sort_keys=False, allow_nan=False) + "\n"


def render_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    return render_csv(report)


def write_report(report: Report, output: OutputConfig) -> Optional[Path]:
    """Writes the report to output.path (atomically) or to stdout.

    The file is written to a temporary sibling and renamed into place, so a
    failure never leaves partial output behind.
    """
    text = render_report(report, output.format)
    if output.path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None

    target = Path(output.path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return target
