import argparse
import json
import sys

from pluripotential.launcher.command_factory_base import CommandFactoryBase


class CommandFactory(CommandFactoryBase):
    __FILE_PREFIX = "pluripotential.commands"
    _STANDARDIZED_CLASS_NAME = "Command"
    __STANDARDIZED_FILE_NAME = "command"

    @classmethod
    def get_module_name(cls, command_name):
        """
        Gets the module name for a given command name.

        Args:
            command_name (str): Name of the command; dashes map to underscores.

        Returns:
            str: The full module name.
        """
        return f"{cls.__FILE_PREFIX}.{command_name.lower().replace('-', '_')}.{cls.__STANDARDIZED_FILE_NAME}"

    @classmethod
    def main(cls, argv=None) -> int:
        """
        Runs one command from JSON-encoded arguments, for scripted use.

        Note:
            The runner is the interactive entry point; this one takes the constructor
            arguments directly, e.g. --kwargs '{"document": "fixture_e1"}'.
        """
        parser = argparse.ArgumentParser()
        parser.add_argument("--command_name", required=True)
        parser.add_argument("--args", default="[]")
        parser.add_argument("--kwargs", default="{}")

        args = parser.parse_args(argv)

        # Deserialize the JSON strings
        args_list = json.loads(args.args)
        kwargs_dict = json.loads(args.kwargs)

        return cls.launch_command_and_run_request_processor(args.command_name, *args_list, **kwargs_dict)


if __name__ == "__main__":
    sys.exit(CommandFactory.main())
