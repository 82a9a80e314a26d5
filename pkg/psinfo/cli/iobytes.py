class BinaryWriter:
    """A class for bytes writing."""

    def __init__(self) -> None:
        self.chunks: list = []

    @property
    def buffer(self) -> bytes:
        return b"".join(self.chunks)

    def write(self, data: bytes) -> None:
        self.chunks.append(bytes(data))

    def write_ascii(self, text: str) -> None:
        self.write(text.encode("ascii"))

    def write_line(self, text: str) -> None:
        """Writes ascii text terminated by a single LF."""
        self.write_ascii(text + "\n")
