from docutils import nodes
from docutils.parsers.rst import Directive

from sobolevop.classical import ClassicalFamily


def _paragraph(text):
    return nodes.entry('', nodes.paragraph('', nodes.Text(text)))


class FamilyDefaultMethods(Directive):
    '''Table of the default implementations of :class:`ClassicalFamily`.'''

    def run(self):
        table = nodes.table(cols=3, width='100%')
        group = nodes.tgroup()
        head = nodes.thead()
        body = nodes.tbody()

        table += group
        for _ in range(3):
            group += nodes.colspec()
        group += head
        group += body

        row = nodes.row()
        for title in 'Method', 'Requires', 'Comment':
            row += _paragraph(title)
        head += row

        for method, requires, default in ClassicalFamily._default_methods():
            row = nodes.row()
            row += _paragraph(method)
            row += _paragraph(', '.join(requires) or '-')
            row += _paragraph(default.__doc__ or '')
            body += row

        return [table]


def setup(app):
    app.add_directive('family-default-methods', FamilyDefaultMethods)

    return {
        'version': '0.1',
        'parallel_read_safe': True,
        'parallel_write_safe': True,
    }
