from django.core.management.base import CommandError

from completion.suites import SUITE_CHOICES, run_suite
from completion.tools import EXIT_FAILURE, CompletionCommand, dumps


class Command(CompletionCommand):
    help = "Run a randomized invariant suite and print pass/fail counts per invariant."

    config_options = CompletionCommand.config_options + ("seed", "cases", "suite")

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("--suite", choices=SUITE_CHOICES)
        parser.add_argument("--seed", type=int)
        parser.add_argument("--cases", type=int)

    def handle_completion(self, completion, config, **options):
        report = run_suite(config["suite"], completion, config["cases"], config["seed"])
        if config["format"] == "json":
            output = dumps(report.as_dict())
        else:
            output = "\n".join(report.lines())
        self.stdout.write(output)
        if not report.ok:
            raise CommandError("%d invariant checks failed" % report.failed, returncode=EXIT_FAILURE)
