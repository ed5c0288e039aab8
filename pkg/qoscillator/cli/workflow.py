"""
The workflow builder factory method.

All the checks and the construction of the workflow are done
inside this function that has pickleable inputs and output
dictionary (``retval``) to allow isolation using a
``multiprocessing.Process``.

"""


def build_workflow(config_file):
    """Create the Nipype workflow of the configured command."""
    from .. import config
    from ..workflows.base import init_qoscillator_wf, init_tasks

    # initalize config
    config.load(config_file)
    build_logger = config.loggers.cli

    retval = {"return_code": 1, "workflow": None}

    execution = config.execution
    source = execution.algebra_file or f"preset {execution.preset}"
    init_msg = f"""
    Running qoscillator version {config.environment.version}:
      * Command: {execution.command}.
      * Truncation order: {execution.order}.
      * Run identifier: {execution.run_uuid}.
      * Random seed: {config.seeds.master}."""
    if execution.command in ("classify", "verify-all"):
        init_msg += f"""
      * Lie algebra: {source}."""
    build_logger.log(25, init_msg)

    try:
        tasks = init_tasks()
    except ValueError as exc:
        build_logger.critical("Could not build the checks of %s: %s", execution.command, exc)
        return retval

    build_logger.log(15, "Checks: %s", ", ".join(task.name for task in tasks))
    retval["workflow"] = init_qoscillator_wf(tasks)
    retval["return_code"] = 0
    return retval
