import json
from fractions import Fraction
from typing import List, Optional

from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.core.serializers.json import DjangoJSONEncoder

from .ccalc import S_BASIS_CHOICES, STRATEGY_CHOICES
from .dmodule import DVector, format_key
from .exceptions import CompletionError, FactorDegreeExceeded
from .forms import FORMAT_CHOICES, CliConfigForm, config_defaults
from .scalars import Poly, RatFun, format_scalar
from .tensor import Completion, TensorElement

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_FACTOR_BOUND = 3

KEY_FORMAT_HELP = (
    "Keys of D print as c(x^{A}, y^{B})_t with exponents in braces; an exponent equal to 1 is omitted, "
    "so c(x, y)_t stands for c(x^{1}, y^{1})_t.")


class ScalarJSONEncoder(DjangoJSONEncoder):
    """DjangoJSONEncoder that writes scalars as literals of the scalar grammar."""

    def default(self, o):
        if isinstance(o, (Fraction, Poly, RatFun)):
            return format_scalar(o)
        return super(ScalarJSONEncoder, self).default(o)


def dumps(record) -> str:
    return json.dumps(record, cls=ScalarJSONEncoder, sort_keys=False)


def dvector_record(d: DVector, names) -> List[dict]:
    return [{"key": format_key(key, names), "coeff": c} for key, c in d.items()]


def element_record(g: TensorElement, text: str) -> dict:
    names = g.completion.schema.u_names
    return {"input": text, "hall": {"a": list(g.hall.a), "b": list(g.hall.b)}, "d": dvector_record(g.d, names)}


def command_error(exc: Exception) -> CommandError:
    """Map a library or configuration error to the command exit codes."""
    if isinstance(exc, FactorDegreeExceeded):
        return CommandError(str(exc), returncode=EXIT_FACTOR_BOUND)
    if isinstance(exc, ValidationError):
        return CommandError("; ".join(exc.messages), returncode=EXIT_USAGE)
    return CommandError(str(exc), returncode=EXIT_USAGE)


class CompletionCommand(BaseCommand):
    """Base of the commands working in one completion.

    Options are validated by ``form_class``; subclasses implement
    ``handle_completion(completion, config, **options)`` and return the text to print.
    """

    form_class = CliConfigForm
    config_options = ("ring", "group", "strategy", "factor_degree_bound", "s_basis", "format")

    def add_arguments(self, parser):
        parser.add_argument("--ring", help="Z, Q, Q[t] or Q(t)")
        parser.add_argument("--group", help="preset free2:<rank> or path to a schema JSON file")
        parser.add_argument("--strategy", choices=STRATEGY_CHOICES)
        parser.add_argument("--factor-degree-bound", dest="factor_degree_bound", type=int)
        parser.add_argument("--s-basis", dest="s_basis", choices=S_BASIS_CHOICES)
        parser.add_argument("--format", choices=FORMAT_CHOICES)

    def get_form_class(self):
        if self.form_class is None:
            raise ImproperlyConfigured(
                "%(cls)s is missing a form class. Define %(cls)s.form_class or override "
                "%(cls)s.get_form_class()." % {"cls": self.__class__.__name__})
        return self.form_class

    def get_form_data(self, options: dict) -> dict:
        """Settings defaults overridden by the given command-line options."""
        data = config_defaults()
        for name in self.config_options:
            if options.get(name) is not None:
                data[name] = options[name]
        return data

    def get_config(self, options: dict) -> dict:
        form = self.get_form_class()(self.get_form_data(options))
        if not form.is_valid():
            raise CommandError(form.error_text(), returncode=EXIT_USAGE)
        return form.cleaned_data

    def get_completion(self, config: dict) -> Completion:
        return Completion(config["ring"], config["group"], config["strategy"], config["s_basis"],
                          config["factor_degree_bound"])

    def handle_completion(self, completion: Completion, config: dict, **options) -> Optional[str]:
        raise NotImplementedError("%s must implement handle_completion()" % self.__class__.__name__)

    def handle(self, *args, **options):
        config = self.get_config(options)
        try:
            completion = self.get_completion(config)
            return self.handle_completion(completion, config, **options)
        except (CompletionError, ValidationError) as exc:
            raise command_error(exc)
