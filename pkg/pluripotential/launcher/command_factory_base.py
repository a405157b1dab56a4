from abc import ABC, abstractmethod
from importlib import import_module
import inspect


class CommandFactoryBase(ABC):

    @classmethod
    def get_command_class(cls, command_name: str):
        """
        Retrieves the class object for a given command name.

        Args:
            command_name (str): Name of the command, e.g. "check-weq".

        Returns:
            Class: The class object implementing the command.

        Raises:
            ValueError: If importing the module or getting the attribute fails.
        """
        module_name = cls.get_module_name(command_name)

        try:
            command_module = import_module(module_name)
            return getattr(command_module, cls._STANDARDIZED_CLASS_NAME)
        except (ImportError, AttributeError, ModuleNotFoundError) as e:
            raise ValueError(f"Unknown command {command_name}: {e=}")

    @classmethod
    @abstractmethod
    def get_module_name(cls, command_name: str) -> str:
        """
        Abstract method to get the module name for a given command name.

        Args:
            command_name (str): Name of the command.

        Returns:
            str: The module name.
        """
        pass

    @classmethod
    def launch_command_and_run_request_processor(cls, command_name: str, *args, **kwargs) -> int:
        """
        Instantiates the command class and runs its request processor method.

        Keyword arguments the command's constructor does not take are dropped, so one parsed
        namespace can feed every command.

        Args:
            command_name (str): Name of the command.
            *args: Variable-length argument list.
            **kwargs: Arbitrary keyword arguments.

        Returns:
            int: The exit status reported by the command.
        """
        command_class = cls.get_command_class(command_name)

        signature = inspect.signature(command_class.__init__)
        filtered_kwargs = {key: value for key, value in kwargs.items() if key in signature.parameters}

        launched_instance = command_class(*args, **filtered_kwargs)

        return launched_instance.process_request()

    @classmethod
    @abstractmethod
    def main(cls):
        """
        Abstract method for the main CLI parser implementation. Refer to an implementation for enlightening examples.
        """
        pass
