"""Print the shields.io coverage segment for the README badge."""

import sys
import xml.etree.ElementTree as ET

COLOURS = ((90, 'green'), (80, 'yellowgreen'), (60, 'yellow'), (40, 'orange'), (0, 'red'))


def badge(path: str = 'coverage.xml') -> str:
    coverage = int(float(ET.parse(path).getroot().attrib['line-rate']) * 100)
    colour = next(name for floor, name in COLOURS if coverage >= floor)
    return f'coverage-{coverage}%25-{colour}'


if __name__ == '__main__':
    print(badge(*sys.argv[1:]))
