from completion.rword import evaluate, parse, print_normal_form
from completion.tools import KEY_FORMAT_HELP, CompletionCommand, dumps, element_record


class Command(CompletionCommand):
    help = ("Evaluate an R-word and print its normal form x^{A} y^{B} [y,x]^{C} * KEY^{K} * ... in the tensor "
            "completion. " + KEY_FORMAT_HELP)

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("expression", help='R-word, e.g. "(x*y)^(t^2+1)"')

    def handle_completion(self, completion, config, **options):
        text = options["expression"]
        g = evaluate(parse(text, completion), completion)
        if config["format"] == "json":
            return dumps(element_record(g, text))
        return print_normal_form(g)
