"""Read and write Bergman fans as XML documents.

A document lists the ground labels (the coordinates of ℝ^E), the rays as
integer vectors and the maximal cones as lists of ray ids.  Ray vectors are
read modulo the all-ones vector, so any representative is accepted.

Uses lxml directly for full control over the document structure.
"""

from __future__ import annotations

from lxml import etree

from .bergman import BergmanFan, fan_from_chains, ray_flat
from .core import GroundSet
from .errors import MatroidError, NotABergmanFan

FAN_NS = "urn:corado:bergman-fan"
NS = {"f": FAN_NS}


# ---------------------------------------------------------------------------
# lxml builder helpers
# ---------------------------------------------------------------------------


def _sub(parent: etree._Element, tag: str, text: str | None = None, **attribs: str) -> etree._Element:
    """Append a namespaced child element."""
    el = etree.SubElement(parent, f"{{{FAN_NS}}}{tag}", **attribs)
    if text is not None:
        el.text = text
    return el


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------


def render_fan_xml(fan: BergmanFan, *, name: str = "Bergman fan") -> str:
    """Serialize a fan: ground labels, rays, maximal cones.

    Args:
        fan: The fan to write.
        name: Content of the document's ``name`` element.

    Returns:
        XML content as a UTF-8 string.
    """
    root = etree.Element(f"{{{FAN_NS}}}fan", nsmap={None: FAN_NS})
    _sub(root, "name", name)

    ground = _sub(root, "ground", dim=str(len(fan.ground)))
    for label in fan.ground.labels:
        _sub(ground, "element", label)

    ray_ids: dict[int, str] = {}
    rays = _sub(root, "rays")
    for i, (flat, vector) in enumerate(fan.rays.items()):
        ray_ids[flat] = str(i)
        _sub(rays, "ray", " ".join(str(x) for x in vector), id=str(i))

    cones = _sub(root, "maximal-cones")
    for cone in fan.maximal_cones:
        _sub(cones, "cone", " ".join(ray_ids[f] for f in cone), dim=str(len(cone)))

    return etree.tostring(
        etree.ElementTree(root),
        xml_declaration=True,
        encoding="UTF-8",
        pretty_print=True,
    ).decode("utf-8")


def write_fan_xml_file(fan: BergmanFan, path: str, **kwargs) -> None:
    content = render_fan_xml(fan, **kwargs)
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------


def parse_fan_xml(source: str | bytes) -> BergmanFan:
    """Parse a fan document; cones are closed under faces on the way in."""
    if isinstance(source, str):
        source = source.encode("utf-8")
    try:
        root = etree.fromstring(source)
    except etree.XMLSyntaxError as exc:
        raise NotABergmanFan(f"malformed fan document: {exc}") from None

    labels = [(el.text or "").strip() for el in root.findall("f:ground/f:element", NS)]
    try:
        ground = GroundSet(tuple(labels))
    except MatroidError as exc:
        raise NotABergmanFan(f"bad ground set: {exc}") from exc

    rays: dict[str, int] = {}
    for el in root.findall("f:rays/f:ray", NS):
        try:
            vector = [int(x) for x in (el.text or "").split()]
        except ValueError:
            raise NotABergmanFan(f"ray {el.get('id')!r} has non-integer coordinates") from None
        rays[el.get("id", "")] = ray_flat(ground, vector)

    chains = []
    for el in root.findall("f:maximal-cones/f:cone", NS):
        ids = (el.text or "").split()
        unknown = [i for i in ids if i not in rays]
        if unknown:
            raise NotABergmanFan(f"cone refers to unknown rays {', '.join(unknown)}")
        chains.append([rays[i] for i in ids])
    return fan_from_chains(ground, chains)


def parse_fan_xml_file(path: str) -> BergmanFan:
    """Convenience wrapper: read a fan document from disk and parse it."""
    with open(path, "rb") as f:
        return parse_fan_xml(f.read())
