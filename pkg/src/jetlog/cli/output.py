"""Report rendering: indented JSON, or aligned text with the summary line first."""

from pydantic import BaseModel

from ..errors import JetlogError
from ..schemas.report import Error


def render_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2)


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, list):
        return ",".join(_cell(v) for v in value)
    return str(value)


def render_table(rows: list[BaseModel]) -> list[str]:
    dumped = [row.model_dump() for row in rows]
    columns = list(dumped[0])
    cells = [[_cell(row[c]) for c in columns] for row in dumped]
    widths = [max(len(c), *(len(line[i]) for line in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths, strict=True))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(line, widths, strict=True)) for line in cells]
    return lines


def render_text(report: BaseModel) -> str:
    lines: list[str] = []
    warnings = getattr(report, "warnings", None) or []
    for warning in warnings:
        lines.append(f"!!! {warning}")
    summary = getattr(report, "summary", None)
    if callable(summary):
        lines.append(summary())

    tables: list[tuple[str, list[BaseModel]]] = []
    for name in type(report).model_fields:
        value = getattr(report, name)
        if name == "warnings":
            continue
        if isinstance(value, list) and value and isinstance(value[0], BaseModel):
            tables.append((name, value))
        elif isinstance(value, list) and value and isinstance(value[0], str):
            lines.append(f"{name}:")
            lines.extend(f"  {item}" for item in value)
        elif isinstance(value, BaseModel):
            lines.extend(f"{name}.{k}: {_cell(v)}" for k, v in value.model_dump().items())
        else:
            lines.append(f"{name}: {_cell(value)}")

    for name, rows in tables:
        lines.append("")
        lines.append(f"{name}:")
        lines.extend(render_table(rows))
    return "\n".join(lines)


def render(report: BaseModel, fmt: str) -> str:
    return render_text(report) if fmt == "text" else render_json(report)


def error_body(error: JetlogError) -> Error:
    return Error(code=error.code, message=error.message, details=error.details)


def render_error(error: Error, fmt: str) -> str:
    if fmt == "text":
        return f"error [{error.code}]: {error.message}"
    return error.model_dump_json(indent=2)
