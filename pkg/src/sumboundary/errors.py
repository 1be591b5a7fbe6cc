"""Exception hierarchy. Every error raised on bad input derives from GraphError."""


class GraphError(ValueError):
    pass


class LoopEdge(GraphError):
    def __init__(self, vertex, line=None):
        self.vertex = vertex
        self.line = line
        msg = f"loop edge at vertex {vertex}"
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class VertexOutOfRange(GraphError):
    def __init__(self, vertex, n, line=None):
        self.vertex = vertex
        self.n = n
        self.line = line
        msg = f"vertex {vertex} out of range for n={n}"
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class NotStronglyConnected(GraphError):
    pass


class NotConnected(GraphError):
    pass


class HTooSmall(GraphError):
    pass


class CoreTooSmall(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class GenerationFailed(GraphError):
    pass
