from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Protocol, runtime_checkable


@dataclass(frozen=True)
class TelemetryEvent:
    """One observation from a benchmark run (``approx_run``, ``cell_done``)."""

    name: str
    attributes: dict[str, Any] = field(default_factory=dict)
    timestamp_ms: float = field(default_factory=lambda: time.time() * 1000)


@runtime_checkable
class TelemetrySink(Protocol):
    def emit(self, event: TelemetryEvent) -> None: ...


class NoOpTelemetrySink:
    def emit(self, event: TelemetryEvent) -> None:
        pass


class InMemoryTelemetrySink:
    """Keeps every event; thread-safe enough for append-only use from worker threads."""

    def __init__(self) -> None:
        self.events: list[TelemetryEvent] = []
        self._counts: Counter[str] = Counter()

    def emit(self, event: TelemetryEvent) -> None:
        self.events.append(event)
        self._counts[event.name] += 1

    def count(self, name: str) -> int:
        return self._counts[name]

    def named(self, name: str) -> list[TelemetryEvent]:
        return [e for e in self.events if e.name == name]


class LoggerTelemetrySink:
    def __init__(
        self,
        logger_name: str = "sphere_depth.telemetry",
        level: int = logging.INFO,
    ) -> None:
        self.logger = logging.getLogger(logger_name)
        self.level = level

    def emit(self, event: TelemetryEvent) -> None:
        summary = " ".join(f"{k}={v}" for k, v in sorted(event.attributes.items()))
        self.logger.log(
            self.level,
            "%s %s",
            event.name,
            summary,
            extra={
                "event_name": event.name,
                "event_timestamp_ms": event.timestamp_ms,
                "event_attributes": event.attributes,
            },
        )
