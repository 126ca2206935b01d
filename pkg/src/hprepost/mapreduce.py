"""A small in-process MapReduce engine.

Input is cut into contiguous splits; map tasks run on a bounded thread
pool; every emitted ``(key, value)`` is routed to partition
``stable_hash(key) % reducers``; reduce tasks then run per partition.

In deterministic mode (the default) keys are reduced in ascending order and
the values of one key arrive ordered by ``(split index, emission order)``.
Tree-building reducers depend on that order, since child insertion order
fixes the pre/post ranks.
"""

from __future__ import annotations

import time
import zlib
from concurrent.futures import FIRST_EXCEPTION, ThreadPoolExecutor, as_completed, wait
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

KeyValue = Tuple[Any, Any]

Mapper = Callable[[Any], Iterable[KeyValue]]
Combiner = Callable[[Any, List[Any]], Iterable[Any]]
Reducer = Callable[[Any, List[Any]], Iterable[KeyValue]]


@dataclass(frozen=True)
class InputSplit:
    index: int
    start: int
    stop: int

    def __len__(self) -> int:
        return self.stop - self.start

    @property
    def indices(self) -> range:
        return range(self.start, self.stop)


def make_splits(n: int, s: int) -> List[InputSplit]:
    """``s`` contiguous splits of ``range(n)`` whose sizes differ by at most 1."""
    if s < 1:
        raise ValueError("split count must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    base, extra = divmod(n, s)
    splits, start = [], 0
    for k in range(s):
        size = base + (1 if k < extra else 0)
        splits.append(InputSplit(k, start, start + size))
        start += size
    return splits


def stable_hash(key: Hashable) -> int:
    """Process-independent hash (``hash(str)`` is salted per interpreter)."""
    if isinstance(key, bool):
        return int(key)
    if isinstance(key, int):
        return key
    if isinstance(key, bytes):
        return zlib.crc32(key)
    if isinstance(key, str):
        return zlib.crc32(key.encode())
    if isinstance(key, tuple):
        h = 0
        for part in key:
            h = (h * 1000003) ^ stable_hash(part)
        return h & 0xFFFFFFFFFFFF
    raise TypeError(f"unsupported key type {type(key).__name__}")


@dataclass
class JobSpec:
    mapper: Mapper
    reducer: Reducer
    combiner: Optional[Combiner] = None
    reducers: int = 1
    workers: int = 1
    deterministic: bool = True

    def __post_init__(self):
        if self.reducers < 1 or self.workers < 1:
            raise ValueError("reducers and workers must be >= 1")


@dataclass
class TaskTrace:
    phase: str
    task: int
    seconds: float
    records_in: int
    records_out: int


@dataclass
class JobResult:
    outputs: List[KeyValue]
    emitted: int = 0  # by mappers, before combining
    mapped: int = 0  # shipped into the shuffle
    delivered: int = 0
    reduce_calls: int = 0
    trace: List[TaskTrace] = field(default_factory=list)

    def as_dict(self) -> Dict[Any, Any]:
        out: Dict[Any, Any] = {}
        for k, v in self.outputs:
            if k in out:
                raise ValueError(f"duplicate output key {k!r}")
            out[k] = v
        return out


def _map_task(job: JobSpec, split: InputSplit, records: Sequence) -> Tuple[List[Dict[Any, list]], int, int, TaskTrace]:
    t0 = time.perf_counter()
    R = job.reducers
    buckets: List[Dict[Any, list]] = [{} for _ in range(R)]
    emitted = 0
    for idx in split.indices:
        for key, value in job.mapper(records[idx]):
            buckets[stable_hash(key) % R].setdefault(key, []).append(value)
            emitted += 1
    shipped = emitted
    if job.combiner is not None:
        shipped = 0
        for bucket in buckets:
            for key, values in bucket.items():
                bucket[key] = list(job.combiner(key, values))
                shipped += len(bucket[key])
    trace = TaskTrace("map", split.index, time.perf_counter() - t0, len(split), emitted)
    return buckets, emitted, shipped, trace


def _reduce_task(job: JobSpec, part: int, groups: Dict[Any, list]):
    t0 = time.perf_counter()
    keys = sorted(groups) if job.deterministic else list(groups)
    out: List[KeyValue] = []
    delivered = 0
    for key in keys:
        values = groups[key]
        delivered += len(values)
        out.extend(job.reducer(key, values))
    trace = TaskTrace("reduce", part, time.perf_counter() - t0, delivered, len(out))
    return out, delivered, len(keys), trace


def _run_all(pool: ThreadPoolExecutor, fn, args_list, ordered: bool):
    """Submit every task; re-raise the first failure and cancel the rest."""
    futures = [pool.submit(fn, *args) for args in args_list]
    done, pending = wait(futures, return_when=FIRST_EXCEPTION)
    for f in futures:
        if f.done() and f.exception() is not None:
            for p in pending:
                p.cancel()
            raise f.exception()
    if ordered:
        return [f.result() for f in futures]
    return [f.result() for f in as_completed(futures)]


def run_job(job: JobSpec, splits: Sequence[InputSplit], records: Sequence) -> JobResult:
    """Execute map, shuffle and reduce; outputs are concatenated per partition.

    The first exception raised by a user function propagates; partial state
    is dropped with the pool.
    """
    R = job.reducers
    with ThreadPoolExecutor(max_workers=job.workers) as pool:
        map_results = _run_all(
            pool, _map_task, [(job, sp, records) for sp in splits], ordered=job.deterministic
        )
        result = JobResult(outputs=[])
        # shuffle: concatenating in split order keeps (split, emission) order per key
        partitions: List[Dict[Any, list]] = [{} for _ in range(R)]
        for buckets, emitted, shipped, trace in map_results:
            result.emitted += emitted
            result.mapped += shipped
            result.trace.append(trace)
            for part, bucket in enumerate(buckets):
                target = partitions[part]
                for key, values in bucket.items():
                    target.setdefault(key, []).extend(values)
        reduce_results = _run_all(
            pool, _reduce_task, [(job, p, partitions[p]) for p in range(R)], ordered=job.deterministic
        )
    for out, delivered, calls, trace in reduce_results:
        result.outputs.extend(out)
        result.delivered += delivered
        result.reduce_calls += calls
        result.trace.append(trace)
    return result
