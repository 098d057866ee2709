""" Adds registry helpers to result classes.

Example:
    'ResultRow.count()' returns the number of rows created since the last reset.
    'ResultRow.find_by("run_id", "000_alpha=0.2")' returns the row of that run.
"""


class ComponentManager:
    """Keeps the instances of a class in creation order. Subclasses declare their own _instances and _object_count."""

    def __repr__(self) -> str:
        """Defines how the object is represented inside the console.

        Returns:
            str: Object representation.
        """
        return f"{self.__class__.__name__}_{self.id}"

    @classmethod
    def reset(cls) -> None:
        """Forgets every instance created so far."""
        cls._instances = []
        cls._object_count = 0

    @classmethod
    def _register(cls, obj: object, obj_id: int = None) -> None:
        """Numbers a new object and appends it to the instances of its class.

        Args:
            obj (object): New object.
            obj_id (int, optional): Object identifier. Defaults to the next free one.
        """
        cls._object_count += 1
        obj.id = cls._object_count if obj_id is None else obj_id
        cls._instances.append(obj)

    @classmethod
    def find_by(cls, attribute_name: str, attribute_value: object) -> object:
        """Returns the first instance whose attribute equals a value, or None."""
        return next((obj for obj in cls._instances if getattr(obj, attribute_name) == attribute_value), None)

    @classmethod
    def all(cls) -> list:
        """Returns the instances in creation order."""
        return list(cls._instances)

    @classmethod
    def count(cls) -> int:
        """Returns the number of instances created since the last reset.

        Returns:
            count (int): Number of instances.
        """
        return len(cls._instances)
