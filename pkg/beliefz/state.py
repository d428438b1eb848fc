from pydantic import BaseModel, ConfigDict

object_setattr = object.__setattr__


class BaseState(BaseModel):
    """
    Base for every value model of the package. Values are immutable once validated so they can
    be shared between threads and used as dictionary keys.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class BaseStateExtra(BaseModel):
    """
    Mutable model that allows extra fields and allows to treat the class as a normal python
    object. Used by the components that hold runtime resources (executors).
    """

    model_config = ConfigDict(extra="allow", arbitrary_types_allowed=True)
