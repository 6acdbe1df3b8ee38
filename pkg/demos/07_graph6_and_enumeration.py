"""
graph6 streams and isomorphism classes
======================================

Graphs travel as graph6 lines. Native generation covers every isomorphism
class up to 8 vertices; bigger scans read a stream from a standard generator.
"""

import io

from alphaforest.enumeration import enumerate_nonisomorphic, read_graph6_stream, write_graph6
from alphaforest.graph import canonical_form, parse_graph6

print([len(enumerate_nonisomorphic(n)) for n in range(1, 8)])

g = parse_graph6("D?{")
print(g, "canonical:", canonical_form(g))

buf = io.StringIO()
write_graph6(enumerate_nonisomorphic(4), buf)
text = buf.getvalue() + "this is not graph6\n"
stream = read_graph6_stream(io.StringIO(text))
graphs = list(stream)
print(len(graphs), "graphs read,", stream.count_emitted, "emitted")
for d in stream.diagnostics:
    print("line", d.line, ":", d.message)
