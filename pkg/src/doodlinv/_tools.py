import os
import warnings
from multiprocessing import Process
from time import time as tt, sleep

import numpy as np
import psutil


def printdf(df, head: int = 20, start_index: int = 0) -> None:
    """
    Prints the head of a census or manifest DataFrame.

    Parameters
    ----------
    df - pd.DataFrame, table to print
    head - int, number of rows to print
    start_index - int, first row to print
    """
    print(df.iloc[start_index:].head(head).to_string())


def time_elapsed(start: float, spaces: int = 0) -> str:
    """
    Prints the time elapsed from the entered start time.

    Parameters
    ----------
    start - float, start time obtained from time.time
    spaces - int, indentation of the printed statement
    """
    delta = tt() - start
    if delta < 1:
        statement = ' '*spaces + f'Time Elapsed: {delta:.6f}s'
    elif delta < 60:
        statement = ' '*spaces + f'Time Elapsed: {delta:.2f}s'
    elif delta < 3600:
        statement = ' '*spaces + f'Time Elapsed: {int(delta/60)}m, {delta % 60:.2f}s'
    else:
        hrs = int(delta/3600)
        mins = int((delta % 3600)/60)
        statement = ' '*spaces + f'Time Elapsed: {hrs}h, {mins}m, {delta % 60:.2f}s'
    print(statement)
    return statement


class SharedMemoryPool:
    """
    Runs func over input_list in separate processes, holding back new work while memory is tight.

    The corpus generator writes its items from inside func, so no return values are collected.

    Attributes
    ----------
    func: callable taking one item of input_list
    input_list: list of inputs, consumed in order
    num_proc: int, number of concurrent processes (non-positive values count back from the cpu count)
    time_out: float, seconds a process may run without using cpu before it is restarted
    max_memory_usage_percent: float, no new process starts above this system memory usage
    print_progress: bool, print progress at every ten percent

    Methods
    -------
    run: process every input, raising RuntimeError if a process fails and terminate_on_error is set
    """
    def __init__(
            self, func, input_list: list, num_proc: int,
            time_out: float = None,
            sleep_time: float = .05,
            terminate_on_error: bool = True,
            max_memory_usage_percent: float = 75.,
            print_progress: bool = False,
    ):
        self.func = func
        self.input_list = list(input_list)
        max_proc = os.cpu_count() or 1
        if num_proc <= 0:
            num_proc = max(max_proc + num_proc - 1, 1)
        self.num_proc = max(min(num_proc, max(max_proc - 1, 1)), 1)
        self.time_out = time_out if time_out is not None else np.inf
        self.sleep_time = sleep_time
        self.terminate_on_error = terminate_on_error
        self.max_memory_usage_percent = max_memory_usage_percent
        self.to_print_progress = print_progress
        self.process_dict = {}
        self.current_input_index = 0
        self.num_completed = 0
        self.previous_completed = 0
        self.failed_inputs = []
        self.start_time = tt()

    def has_memory_issues(self) -> bool:
        return psutil.virtual_memory().percent >= self.max_memory_usage_percent

    def has_available_processors(self) -> bool:
        return len(self.process_dict) < self.num_proc

    def has_more_inputs(self) -> bool:
        return self.current_input_index < len(self.input_list)

    def add_new_process(self):
        inputs = self.input_list[self.current_input_index]
        p = Process(target=self.func, args=(inputs,))
        p.start()
        self.process_dict[p.pid] = {'process': p, 'start_time': tt(), 'inputs': inputs, 'cpu_time': 0}
        self.current_input_index += 1

    def check_for_completed_processes_and_timeouts(self):
        for pid in list(self.process_dict):
            info = self.process_dict[pid]
            p = info['process']
            if not p.is_alive():
                self.remove_process(pid)
                self.num_completed += 1
                continue
            try:
                cpu_time = sum(psutil.Process(pid).cpu_times())
            except psutil.NoSuchProcess:
                continue
            if cpu_time > info['cpu_time']:
                info['cpu_time'] = cpu_time
                info['start_time'] = tt()
            elif tt() - info['start_time'] > self.time_out:
                warnings.warn(f'process {pid} timed out and was restarted', category=RuntimeWarning)
                p.terminate()
                self.input_list.append(info['inputs'])
                self.remove_process(pid)

    def remove_process(self, pid):
        info = self.process_dict.pop(pid)
        p = info['process']
        p.join()
        exitcode = p.exitcode
        p.close()
        if exitcode not in (0, None, -15):
            self.failed_inputs.append(info['inputs'])
            if self.terminate_on_error:
                self.terminate_all()
                raise RuntimeError(f'processing {info["inputs"]!r} failed with exit code {exitcode}')

    def terminate_all(self):
        for info in self.process_dict.values():
            q = info['process']
            q.terminate()
            q.join()
            q.close()
        self.process_dict = {}

    def print_progress(self):
        if not self.to_print_progress or not self.input_list:
            return
        percent_completed = self.num_completed/len(self.input_list)
        ten_percent = (int(100*percent_completed)//10)*10
        if ten_percent > self.previous_completed:
            print(f'Completed {percent_completed:.2%} ({self.num_completed}/{len(self.input_list)})')
            time_elapsed(self.start_time, 2)
            self.previous_completed = ten_percent

    def run(self):
        try:
            while True:
                while self.has_available_processors() and self.has_more_inputs() and not self.has_memory_issues():
                    self.add_new_process()
                self.check_for_completed_processes_and_timeouts()
                self.print_progress()
                if not self.process_dict and not self.has_more_inputs():
                    break
                sleep(self.sleep_time)
        except BaseException:
            self.terminate_all()
            raise
        return self.failed_inputs
