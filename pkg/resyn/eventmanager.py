import logging
from weakref import WeakKeyDictionary

logger = logging.getLogger(__name__)


class Event(object):
    """
    A superclass for any events that might be generated during
    synthesis or evaluation and sent to the EventManager.
    """

    def __init__(self):
        self.name = "Generic event"

    def __str__(self):
        return self.name


class SynthesisStartedEvent(Event):
    """
    A synthesis run began.
    """

    def __init__(self, suite: str, positives: int, negatives: int):
        self.name = "Synthesis started event"
        self.suite = suite
        self.positives = positives
        self.negatives = negatives

    def __str__(self):
        return f"{self.name}: suite={self.suite}, |P|={self.positives}, |N|={self.negatives}"


class DecompositionEvent(Event):
    """
    A node of the derivation was split into sub-problems.
    """

    def __init__(self, action, depth: int, sizes: tuple):
        self.name = "Decomposition event"
        self.action = action
        self.depth = depth
        self.sizes = sizes

    def __str__(self):
        return f"{self.name}: {self.action} at depth {self.depth} into {self.sizes}"


class LeafSynthesizedEvent(Event):
    """
    A leaf of the derivation was solved (or given up on).
    """

    def __init__(self, source, pattern: str | None, depth: int):
        self.name = "Leaf synthesized event"
        self.source = source
        self.pattern = pattern
        self.depth = depth

    def __str__(self):
        return f"{self.name}: {self.pattern!r} from {self.source} at depth {self.depth}"


class SynthesisFinishedEvent(Event):
    """
    A synthesis run ended.
    """

    def __init__(self, pattern: str | None, elapsed: float):
        self.name = "Synthesis finished event"
        self.pattern = pattern
        self.elapsed = elapsed

    def __str__(self):
        outcome = repr(self.pattern) if self.pattern is not None else "failure"
        return f"{self.name}: {outcome} in {self.elapsed:.3f}s"


class InstanceEvaluatedEvent(Event):
    """
    One corpus instance was scored.
    """

    def __init__(self, instance_id: str, success: bool, position: int, total: int):
        self.name = "Instance evaluated event"
        self.instance_id = instance_id
        self.success = success
        self.position = position
        self.total = total

    def __str__(self):
        return f"{self.name}: {self.instance_id} ({self.position}/{self.total}) success={self.success}"


class EventManager(object):
    """
    We coordinate communication between the synthesizer, the harness
    and whoever wants to watch them.
    """

    def __init__(self):
        self.listeners = WeakKeyDictionary()

    def register_listener(self, listener):
        """
        Adds a listener. It will receive posted events
        through its notify(event) call.
        """

        self.listeners[listener] = 1

    def unregister_listener(self, listener):
        """
        Removes a listener. Listeners that stop existing are
        dropped automatically by the weak references.
        """

        if listener in self.listeners.keys():
            del self.listeners[listener]

    def post(self, event):
        """
        Broadcasts an event to all listeners.
        """

        logger.debug(f"Posting event: {event}")
        for listener in list(self.listeners.keys()):
            listener.notify(event)
