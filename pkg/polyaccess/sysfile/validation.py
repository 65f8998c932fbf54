class ValidationBase:
    """Run ``valid_<section>`` hooks and a final ``clean`` over collected data.

    Hooks receive the data gathered so far. Returning ``False`` rejects the
    input, returning a dict merges it into ``cleaned_data``. Hooks raise a
    positioned :class:`~polyaccess.core.exceptions.ParseError` to explain a
    rejection.
    """

    sections = ()

    def __init__(self):
        self.cleaned_data = {}

    def is_valid(self, data):
        self.cleaned_data = dict(data)
        for name in self.sections:
            method = getattr(self, f"valid_{name}", None)
            if callable(method):
                result = method(self.cleaned_data)
                if result is False:
                    return False
                if isinstance(result, dict):
                    self.cleaned_data.update(result)
        clean = getattr(self, "clean", None)
        if callable(clean):
            result = clean(self.cleaned_data)
            if result is False:
                return False
            if isinstance(result, dict):
                self.cleaned_data.update(result)
        return True
