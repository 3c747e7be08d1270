"""
Rendering of command results as a text table, CSV or JSON
"""
import io
import csv
import json
import logging
import pymy.core.util
import pymy.core.appvars

logger = logging.getLogger()

# column kinds
VALUE = "value"
ERROR = "error"
INTEGER = "integer"
TEXT = "text"
FLAG = "flag"


class Column(object):
    """
    A named column and how its cells are printed
        value   fixed point, AppVars.value_decimals fractional digits
        error   scientific, AppVars.error_sig_digits significant digits
        integer / text / flag   as is
    """

    def __init__(self, name, kind=VALUE):
        if kind not in (VALUE, ERROR, INTEGER, TEXT, FLAG):
            raise ValueError("Unknown column kind {0}".format(kind))
        self.name = name
        self.kind = kind

    def format(self, value):
        """
        :param value: the raw cell, None prints as an empty cell
        :return: the cell as a string
        """
        if value is None:
            return ""
        app_vars = pymy.core.appvars.AppVars()
        if self.kind == VALUE:
            return pymy.core.util.format_fixed(value, app_vars.value_decimals)
        if self.kind == ERROR:
            return pymy.core.util.format_sci(value, app_vars.error_sig_digits)
        if self.kind == INTEGER:
            return str(int(value))
        if self.kind == FLAG:
            return "yes" if value else "no"
        return str(value)

    def __repr__(self):
        return '<pymy.app.output.Column "{0} ({1})">'.format(self.name, self.kind)


class OutputRecord(object):
    """
    A table of results. Rows are dicts keyed by column name holding raw values, formatting happens on render.
    When group_column is set the text rendering prints one sub table per value of that column.
    :param name: short name, ex: my-ex1
    :param columns: list of Column
    :param title: line printed above the text table
    :param inputs: dict of the inputs that produced the table, carried into JSON
    :param group_column: optional column name to split the text table on
    """

    def __init__(self, name, columns, title=None, inputs=None, group_column=None):
        self.__name = name
        self.__columns = list(columns)
        self.__title = title
        self.__inputs = dict(inputs or {})
        self.__group_column = group_column
        self.__rows = []

    @property
    def name(self):
        return self.__name

    @property
    def columns(self):
        return list(self.__columns)

    @property
    def column_names(self):
        return [column.name for column in self.__columns]

    @property
    def title(self):
        return self.__title

    @property
    def inputs(self):
        return dict(self.__inputs)

    @property
    def group_column(self):
        return self.__group_column

    @property
    def rows(self):
        return [dict(row) for row in self.__rows]

    def add_row(self, row):
        """
        :param row: dict of column name to raw value, missing columns are empty cells
        """
        unknown = set(row) - set(self.column_names)
        if unknown:
            raise ValueError("Unknown columns {0} for table {1}".format(", ".join(sorted(unknown)), self.name))
        self.__rows.append(dict(row))

    def formatted_rows(self, rows=None):
        """:return: list of lists of cell strings"""
        rows = self.__rows if rows is None else rows
        return [[column.format(row.get(column.name)) for column in self.__columns] for row in rows]

    def to_dict(self):
        return {"name": self.name, "inputs": self.inputs, "rows": self.rows}

    def __len__(self):
        return len(self.__rows)

    def __repr__(self):
        return '<pymy.app.output.OutputRecord "{0}, {1} rows">'.format(self.name, len(self))


def _text_table(header, cells):
    widths = [len(name) for name in header]
    for row in cells:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
    lines = ["  ".join(name.ljust(width) for name, width in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    for row in cells:
        lines.append("  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
    return lines


def render_text(records):
    """
    :param records: list of OutputRecord
    :return: the aligned text tables, LF line endings
    """
    lines = []
    for record in records:
        if lines:
            lines.append("")
        if record.title:
            lines.append(record.title)
        if record.group_column is None:
            lines.extend(_text_table(record.column_names, record.formatted_rows()))
            continue
        # one sub table per group, in order of first appearance
        header = [name for name in record.column_names if name != record.group_column]
        keep = [index for index, name in enumerate(record.column_names) if name != record.group_column]
        groups = []
        for row in record.rows:
            if row[record.group_column] not in groups:
                groups.append(row[record.group_column])
        for group in groups:
            group_rows = [row for row in record.rows if row[record.group_column] == group]
            cells = [[row_cells[index] for index in keep] for row_cells in record.formatted_rows(group_rows)]
            lines.append("[{0}]".format(group))
            lines.extend(_text_table(header, cells))
    return "\n".join(lines) + "\n"


def render_csv(records):
    """
    :param records: list of OutputRecord
    :return: CSV text, a header row per record, records separated by an empty line, LF line endings
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for index, record in enumerate(records):
        if index:
            buffer.write("\n")
        writer.writerow(record.column_names)
        writer.writerows(record.formatted_rows())
    return buffer.getvalue()


def render_json(records, inputs=None, command=None):
    """
    One JSON object with the inputs, the raw results and the version. Floats are written with repr, the shortest
    string that parses back to the same double
    :param records: list of OutputRecord
    :param inputs: dict of the command inputs
    :param command: the command name
    :return: JSON text
    """
    app_vars = pymy.core.appvars.AppVars()
    document = {
        "inputs": dict(inputs or {}),
        "results": [record.to_dict() for record in records],
        "meta": {"version": app_vars.version, "command": command}
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render(records, output_format, inputs=None, command=None):
    """
    :param records: list of OutputRecord
    :param output_format: text, csv or json
    :return: the rendered string
    """
    if output_format == "text":
        return render_text(records)
    if output_format == "csv":
        return render_csv(records)
    if output_format == "json":
        return render_json(records, inputs, command)
    raise ValueError("Unknown output format {0}".format(output_format))
