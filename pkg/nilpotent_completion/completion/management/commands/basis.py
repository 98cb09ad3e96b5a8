from completion.dmodule import format_key
from completion.scalars import format_scalar
from completion.tools import KEY_FORMAT_HELP, CompletionCommand, dumps, dvector_record


class Command(CompletionCommand):
    help = ("Print the coordinates of c(x^ALPHA, y^BETA)_LAMBDA in the basis of D, one KEY: COEFF per line. "
            + KEY_FORMAT_HELP)

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument("alpha")
        parser.add_argument("beta")
        parser.add_argument("lam", metavar="lambda")

    def handle_completion(self, completion, config, **options):
        ring = completion.ring
        alpha, beta, lam = (ring.parse(options[name]) for name in ("alpha", "beta", "lam"))
        vector = completion.strategy.ccoord(alpha, beta, lam)
        names = completion.schema.u_names
        if config["format"] == "json":
            return dumps({"input": [options["alpha"], options["beta"], options["lam"]],
                          "d": dvector_record(vector, names)})
        if not vector:
            return "(zero)"
        return "\n".join("%s: %s" % (format_key(key, names), format_scalar(c)) for key, c in vector.items())
