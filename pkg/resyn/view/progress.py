import logging
import sys

from ..eventmanager import *

logger = logging.getLogger(__name__)


class ProgressView(object):
    """
    Reports evaluation progress on a text stream.

    :param event_manager: the event manager.
    :param stream: where progress lines go.
    :param verbose: also report every finished synthesis run.
    """

    def __init__(self, event_manager: EventManager, stream=None, verbose: bool = False) -> None:
        self.event_manager: EventManager = event_manager
        self.event_manager.register_listener(self)
        self.stream = stream if stream is not None else sys.stderr
        self.verbose = verbose
        self.failures: int = 0

    def notify(self, event: Event) -> None:
        """
        Receive events posted to the message queue.

        :param event: the event.
        """
        if isinstance(event, InstanceEvaluatedEvent):
            self._handle_instance_event(event)
        elif self.verbose and isinstance(event, SynthesisFinishedEvent):
            print(f"  {event}", file=self.stream)

    def _handle_instance_event(self, event: InstanceEvaluatedEvent) -> None:
        if not event.success:
            self.failures += 1
        status = "ok" if event.success else "FAIL"
        print(f"[{event.position}/{event.total}] {event.instance_id} {status}", file=self.stream)
        if event.position == event.total:
            logger.info(f"Progress finished with {self.failures} failures")
