from django.apps import AppConfig


class CompletionConfig(AppConfig):
    name = 'completion'
    verbose_name = 'Tensor completions of 2-nilpotent groups'
