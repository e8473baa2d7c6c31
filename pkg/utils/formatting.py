"""
Text, CSV and JSON renderings shared by the command line and the API.
"""
import csv
import io
import json

from diagrams import render, writhe, component_count, diagram_digest, oriented
from khovanov.ranks import format_table

SURGERY_COLUMNS = ['q', 'n', 'sign', 'orbifold', 'torusBranchSet', 'torusParameters', 'tauSlope',
                   'expectedDeterminant']


def ranks_text(ranks):
    return format_table(ranks)


def ranks_json(ranks):
    return json.dumps(ranks.to_dict(), indent=2)


def claims_text(claims):
    lines = [c.line() for c in claims]
    passed = sum(c.passed for c in claims)
    lines.append(f'{passed}/{len(claims)} claims passed')
    return '\n'.join(lines)


def claims_json(claims):
    return json.dumps({
        'claims': [c.to_dict() for c in claims],
        'passed': sum(c.passed for c in claims),
        'total': len(claims),
    }, indent=2)


def surgery_csv(rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SURGERY_COLUMNS, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        record = row.to_dict()
        record['torusParameters'] = ' '.join(str(v) for v in record['torusParameters'])
        writer.writerow(record)
    return buffer.getvalue().rstrip('\n')


def surgery_json(rows):
    return json.dumps([row.to_dict() for row in rows], indent=2)


def les_text(report):
    lines = []
    for row in report.rows:
        sign = '+' if row.sign > 0 else '-'
        recursive = 'anchor' if row.anchor else f'<= {row.recursive_bound} {"ok" if row.recursive_holds else "VIOLATED"}'
        closed = f'<= {row.closed_bound} {"ok" if row.closed_holds else "VIOLATED"}'
        equal = ' (equality)' if row.equality else ''
        lines.append(f'tau({sign}1/{row.n}): rank {row.rank}; recursive {recursive}; closed form {closed}{equal}')
    lines.append('bound holds' if report.passed else 'bound VIOLATED')
    return '\n'.join(lines)


def growth_text(report):
    lines = []
    for point in report.points:
        value = point.rank if point.rank is not None else f'- ({point.note})'
        lines.append(f'T({report.p},{point.q}): {value}')
    for diff in report.differences:
        lines.append(f'q {diff["from"]} -> {diff["to"]}: {diff["delta"]:+d}')
    return '\n'.join(lines)


def diagram_summary(diagram):
    """PD text with the summary numbers every client wants next to it"""
    diagram = oriented(diagram)
    return {
        'name': diagram.name,
        'pd': render(diagram),
        'crossings': diagram.crossing_count,
        'writhe': writhe(diagram),
        'components': component_count(diagram),
        'digest': diagram_digest(diagram),
    }
