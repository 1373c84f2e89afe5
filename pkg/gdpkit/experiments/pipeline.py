"""
Row pipeline of the experiments: each time grid point travels as a dict through a chain of filters,
every filter adding its columns before handing the row to the next stream.
"""

__version__ = '1.0'
__all__ = [
    'Stream', 'StreamIter', 'RowFilter', 'FilterChain'
]

__author__ = 'GDPKIT'

from typing import Any, Callable, Iterable, Mapping, Optional, Sequence


class Stream(list):
    '''
    Queue of rows between two filters. Iterating consumes it: every row handed out is removed.
    Once closed no row can be added, the remaining ones can still be consumed.
    '''

    def __init__(self, rows: Optional[Iterable] = None, is_closed: bool = False):
        '''
        Parameters:
            rows : Iterable
                Rows already queued.
            is_closed : bool
                True for a source stream whose rows are all known in advance.
        '''
        super().__init__(rows if rows is not None else ())
        self.__is_closed = is_closed
        self.__iter = StreamIter(self)

    def __iter__(self) -> "StreamIter":
        # Shared by every consumer.
        return self.__iter

    def is_closed(self) -> bool:
        return self.__is_closed

    def append(self, row):
        '''
        Raises:
            RuntimeError
                If the stream is closed.
        '''
        if self.__is_closed:
            raise RuntimeError("row appended to a closed stream")
        super().append(row)

    def close(self):
        '''
        Raises:
            RuntimeError
                If the stream is already closed.
        '''
        if self.__is_closed:
            raise RuntimeError("stream closed twice")
        self.__is_closed = True


class StreamIter:
    '''
    Consuming iterator of a Stream, rows come out in insertion order.
    '''

    def __init__(self, rows: list):
        self.rows = rows

    def __next__(self):
        if not self.rows:
            raise StopIteration("no row queued")
        return self.rows.pop(0)

    def has_next(self) -> bool:
        return bool(self.rows)


class RowFilter:
    '''
    Single input, single output step of a FilterChain.
    Subclasses override _on_data, read the row, add their columns and push it with _push_data.
    '''

    def __init__(self, inputs: str, outputs: str):
        '''
        Parameters:
            inputs : str
                Input stream name.
            outputs : str
                Output stream name.
        '''
        self.__input_name = inputs
        self.__output_name = outputs
        self._has_outputted = False

    def setup(self, inputs: Stream, outputs: Stream, state: Mapping[str, Any]):
        '''
        Saves the references to the streams and the shared state before the execution.
        '''
        self.__input = inputs
        self.__output = outputs
        self._state = state

    def execute(self):
        '''
        Pops at most one row from the input and handles it. Closes the output once the input
        is closed and drained.
        '''
        self._has_outputted = False
        if self.__output.is_closed():
            return
        rows = iter(self.__input)
        if rows.has_next():
            self._on_data(next(rows))
        elif self.__input.is_closed():
            self._on_inputs_closed()

    def get_input_name(self) -> str:
        return self.__input_name

    def get_output_name(self) -> str:
        return self.__output_name

    def _on_data(self, data: Mapping[str, Any]):
        self._push_data(data)

    def _on_inputs_closed(self):
        self.__output.close()

    def _push_data(self, data: Any):
        self._has_outputted = True
        self.__output.append(data)


class FilterChain:
    '''
    Ordered sequence of filters, each one reading the stream written by the previous one.

    Attributes:
        stream_dict : Mapping[str : Stream]
            Streams used by the filters, by name.
        state_dict : Mapping[str : Any]
            States updated by the filters.
    '''

    def __init__(self, filters: Sequence[RowFilter] = None):
        self.__filters = list(filters) if filters is not None else []
        self.stream_dict = dict()
        self.state_dict = dict()

    def add_filter(self, row_filter: RowFilter):
        self.__filters.append(row_filter)
        return self

    def execute(self, source: Mapping[str, Stream], on_data_output: Callable = None):
        '''
        Runs every filter in order, one row at a time, until the last output stream is closed.

        Parameters:
            source : Mapping[str : Stream]
                Source streams.
            on_data_output : Callable
                Called every time the last filter outputs a row.
        Raises:
            ValueError
                If the chain is empty.
        '''
        if not self.__filters:
            raise ValueError("cannot execute an empty filter chain")
        self.stream_dict.update(source)
        for f in self.__filters:
            f.setup(self.__stream(f.get_input_name()), self.__stream(f.get_output_name()), self.state_dict)

        last = self.__filters[-1]
        while not self.__stream(last.get_output_name()).is_closed():
            for f in self.__filters:
                f.execute()
            if on_data_output is not None and last._has_outputted:
                on_data_output()
        return self

    def streams(self) -> Mapping[str, Stream]:
        return self.stream_dict

    def state(self, key: str, default: Any) -> Any:
        return self.state_dict.get(key, default)

    def __stream(self, name: str) -> Stream:
        return self.stream_dict.setdefault(name, Stream())
