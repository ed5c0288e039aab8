#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""qoscillator runner."""
from .. import config


def main():
    """Entry point."""
    import atexit
    import gc
    import os
    import sys
    from time import perf_counter

    from ..reports.core import Report
    from ..workflows.base import run_workflow, workflow_inputs
    from .parser import parse_args
    from .workflow import build_workflow

    _cwd = os.getcwd()
    # restore the environment variables changed during the run
    atexit.register(config.restore_env)

    parse_args()

    config_file = config.execution.work_dir / config.execution.run_uuid / "config.toml"
    config_file.parent.mkdir(exist_ok=True, parents=True)
    config.to_filename(config_file)

    # load the written file back so a run can be replayed from it alone
    retval = build_workflow(config_file)
    exitcode = retval["return_code"]
    workflow = retval["workflow"]
    if workflow is None or exitcode != 0:
        sys.exit(exitcode or 1)

    config.execution.log_dir.mkdir(exist_ok=True, parents=True)

    _pool = None
    _plugin = config.nipype.get_plugin()
    if _plugin["plugin"] == "MultiProc":
        import multiprocessing as mp
        from concurrent.futures import ProcessPoolExecutor
        from contextlib import suppress

        from nipype.pipeline.plugins.multiproc import MultiProcPlugin

        # the engines are single threaded
        os.environ["OMP_NUM_THREADS"] = "1"

        with suppress(RuntimeError):
            mp.set_start_method("fork")
        gc.collect()

        _pool = ProcessPoolExecutor(
            max_workers=config.execution.nprocs,
            initializer=config._process_initializer,
            initargs=(_cwd, 1),
        )
        multiproc = MultiProcPlugin(plugin_args=_plugin["plugin_args"])
        multiproc.pool = _pool
        _plugin = {"plugin": multiproc}

    config.loggers.cli.log(
        15,
        "\n".join(["qoscillator config:"] + ["\t\t%s" % s for s in config.dumps().splitlines()]),
    )
    config.loggers.cli.log(25, "qoscillator started!")

    start = perf_counter()
    try:
        checks = run_workflow(workflow, _plugin)
    except Exception as e:
        config.loggers.cli.critical("qoscillator failed: %s", e)
        raise
    finally:
        if _pool is not None:
            _pool.shutdown()

    report = Report(config.execution.command, workflow_inputs(), checks, perf_counter() - start)
    text = report.write(config.execution.output, config.execution.output_format)
    if config.execution.output is None:
        print(text)

    failed = [check.name for check in checks if not check.passed]
    if failed:
        config.loggers.cli.critical("Failed checks: %s", ", ".join(failed))
    else:
        config.loggers.cli.log(25, "qoscillator finished successfully!")
    sys.exit(report.return_code)


if __name__ == "__main__":
    raise RuntimeError(
        "Please `pip install` this and run via the commandline interfaces, `qoscillator <command>`"
    )
