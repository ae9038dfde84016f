"""Very few interface defining base class definitions.

`ComputationError` is the root of all exceptions raised by the package,
`JSONSerializable` the root of all value classes with a documented
JSON format.
"""
import json


class ComputationError(ValueError):
    """base class of all domain errors of `ncdirac`.

    The class name serves as a stable machine readable ``tag``, e.g.
    for the command line interface.

    >>> from ncdirac.interfaces import ComputationError
    >>> class NotNice(ComputationError): pass
    >>> NotNice('too ugly').tag
    'NotNice'
    >>> isinstance(NotNice(), ValueError)
    True

    """
    @property
    def tag(self):
        return type(self).__name__


class InputError(ComputationError):
    """malformed input document, e.g. broken JSON or a missing field"""


class JSONSerializable(object):
    """abstract base class for values with a JSON representation.

    Derived classes implement `to_json`, returning plain Python
    containers, and the class method `from_json`. `dumps` and `loads`
    are implemented here.
    """
    def to_json(self):
        """abstract method, return a `dict` or `list` of plain values"""
        raise NotImplementedError('method to_json() must be implemented in derived class')

    @classmethod
    def from_json(cls, doc):
        """abstract class method, return an instance from ``doc``"""
        raise NotImplementedError('method from_json() must be implemented in derived class')

    def dumps(self, **kwargs):
        """return `to_json` as JSON text, ``kwargs`` go to `json.dumps`"""
        return json.dumps(self.to_json(), **kwargs)

    @classmethod
    def loads(cls, text):
        """return an instance from JSON ``text``"""
        try:
            doc = json.loads(text)
        except ValueError as e:
            raise InputError('malformed JSON: %s' % str(e))
        return cls.from_json(doc)


def require_keys(doc, keys, what='document'):
    """raise `InputError` unless ``doc`` is a `dict` containing ``keys``.

    >>> from ncdirac.interfaces import require_keys
    >>> require_keys({'n': 2, 'basis': []}, ('n', 'basis'))
    >>> try:
    ...     require_keys({'n': 2}, ('n', 'basis'), 'DiracStructure')
    ... except ValueError as e:
    ...     print(e)
    DiracStructure misses key(s) ['basis']

    """
    if not isinstance(doc, dict):
        raise InputError('%s must be a JSON object, not %s'
                         % (what, type(doc).__name__))
    missing = [k for k in keys if k not in doc]
    if missing:
        raise InputError('%s misses key(s) %s' % (what, str(missing)))
