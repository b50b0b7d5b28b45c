"""
Minimal SVG document builder

- Fixed page size and fixed coordinates (no bounding-box autoscale), so output is byte-stable
- Commands are kept in insertion order
"""

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width)dpx" height="%(height)dpx" viewBox="0 0 %(width)d %(height)d" version="1.1"
    xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(width)d" height="%(height)d" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""


class SVG:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.commands = []

    def line(self, points, color="#000000", width=1.0, css_class=None):
        cls = f' class="{css_class}"' if css_class else ""
        self.commands.append(
            '<polyline%s points="%s" style="fill:none;stroke:%s;stroke-width:%f" />' % (
                cls,
                " ".join("%f,%f" % item for item in points),
                color,
                width,
            )
        )

    def polygon(self, points, fill="#eeeeee", color="#000000", width=0.0):
        self.commands.append(
            '<polygon points="%s" style="fill:%s;stroke:%s;stroke-width:%f" />' % (
                " ".join("%f,%f" % item for item in points),
                fill,
                color,
                width,
            )
        )

    def circle(self, x, y, diameter, stroke="#000000", fill="none"):
        radius = diameter * 0.5
        self.commands.append(
            '<circle cx="%(x)f" cy="%(y)f" r="%(radius)f" style="fill:%(fill)s;stroke:%(stroke)s;stroke-width:1" />' % locals()
        )

    def text(self, x, y, text, color="#666666", size=12):
        self.commands.append(
            '<text x="%(x)f" y="%(y)f" fill="%(color)s" font-size="%(size)d" font-family="monospace">%(text)s</text>' % locals()
        )

    def render(self) -> str:
        width, height = self.width, self.height
        return PREAMBLE % locals() + "".join(item + "\n" for item in self.commands) + POSTAMBLE

    def save(self, filename):
        with open(filename, "w") as f:
            f.write(self.render())
