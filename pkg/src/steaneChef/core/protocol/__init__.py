"""Assembly, text format and acceptance rule of the verified four-block preparation."""

from steaneChef.core.protocol.schedule import (
    Location,
    ProtocolSchedule,
    Tick,
    acceptance,
    build_protocol,
    parse_protocol,
    serialize_protocol,
)

__all__ = [
    "Location",
    "ProtocolSchedule",
    "Tick",
    "acceptance",
    "build_protocol",
    "parse_protocol",
    "serialize_protocol",
]
