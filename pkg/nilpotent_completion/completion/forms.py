from django import forms
from django.conf import settings
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from .ccalc import S_BASIS_CHOICES, STRATEGY_CHOICES
from .exceptions import CompletionError
from .hall import resolve_group
from .scalars import RING_CHOICES, Ring
from .suites import SUITE_CHOICES

FORMAT_CHOICES = ("text", "json")


def _choices(values):
    return [(value, value) for value in values]


def config_defaults() -> dict:
    """Initial form data from ``settings.NILPOTENT_COMPLETION``."""
    config = getattr(settings, "NILPOTENT_COMPLETION", {})
    return {
        "ring": config.get("RING", "Q[t]"),
        "group": config.get("GROUP", "free2:2"),
        "strategy": config.get("STRATEGY", "auto"),
        "factor_degree_bound": config.get("FACTOR_DEGREE_BOUND", 6),
        "s_basis": config.get("S_BASIS", "std"),
        "seed": config.get("SEED", 0),
        "cases": config.get("CASES", 100),
        "format": config.get("OUTPUT_FORMAT", "text"),
        "suite": "all",
    }


class CliConfigForm(forms.Form):
    ring = forms.CharField(label=_("Ring"), help_text=_("One of %s.") % ", ".join(RING_CHOICES))
    group = forms.CharField(label=_("Group"), help_text=_("Preset free2:<rank> or path to a schema JSON file."))
    strategy = forms.ChoiceField(label=_("Strategy"), choices=_choices(STRATEGY_CHOICES))
    factor_degree_bound = forms.IntegerField(label=_("Factor degree bound"), min_value=1, max_value=64)
    s_basis = forms.ChoiceField(label=_("S-basis"), choices=_choices(S_BASIS_CHOICES))
    seed = forms.IntegerField(label=_("Seed"), min_value=0, max_value=2 ** 64 - 1)
    cases = forms.IntegerField(label=_("Cases"), min_value=1)
    format = forms.ChoiceField(label=_("Output format"), choices=_choices(FORMAT_CHOICES))
    suite = forms.ChoiceField(label=_("Suite"), choices=_choices(SUITE_CHOICES))

    def clean_ring(self) -> Ring:
        try:
            return Ring.named(self.cleaned_data["ring"])
        except CompletionError as exc:
            raise ValidationError(str(exc))

    def clean_group(self):
        try:
            return resolve_group(self.cleaned_data["group"])
        except CompletionError as exc:
            raise ValidationError(str(exc))

    def error_text(self) -> str:
        return "; ".join("%s: %s" % (name, " ".join(str(e) for e in errors)) for name, errors in self.errors.items())
