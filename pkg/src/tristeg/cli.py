"""Command-line interface: ``tristeg hide|reveal|capacity|psnr|inspect``.

Exit codes: 0 success, 1 usage, 2 I/O or format, 3 capacity exceeded,
4 bad key or corrupt payload. Machine-readable output goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import getpass
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from tristeg import stego
from tristeg.keycore import InvalidKey, SecretKey
from tristeg.metrics import ShapeMismatch, lsb_diff_census
from tristeg.videoio import FormatError, read_video, write_video

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CAPACITY = 3
EXIT_BADKEY = 4

KEY_ENV = "STEG_KEY"


@dataclass
class CommandResult:
    exit_code: int = EXIT_OK
    stdout: bytes = b""
    stderr: str = ""


def _fail(code: int, msg: str) -> CommandResult:
    return CommandResult(code, b"", f"error: {msg}\n")


def _load(path: str) -> stego.VideoSequence:
    if not os.path.exists(path):
        raise FormatError(f"{path}: no such file or directory")
    try:
        return read_video(path)
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror or exc}") from None


def cmd_hide(cover: str, message: bytes, key: str | bytes, out: str,
             fmt: str = "auto") -> CommandResult:
    try:
        secret = SecretKey(key)
        video = _load(cover)
        stego_video = stego.embed(video, message, secret)
        write_video(stego_video, out, fmt)
    except InvalidKey as exc:
        return _fail(EXIT_USAGE, str(exc))
    except FormatError as exc:
        return _fail(EXIT_IO, str(exc))
    except stego.CapacityError as exc:
        return _fail(EXIT_CAPACITY, str(exc))
    report = lsb_diff_census(video, stego_video)
    psnr_text = "inf" if report.global_psnr == float("inf") else f"{report.global_psnr:.4f}"
    return CommandResult(
        EXIT_OK,
        b"",
        f"slots_used={stego.lsb_slots_used(len(message))} "
        f"capacity_bytes={stego.capacity(video)} global_psnr={psnr_text}\n",
    )


def cmd_reveal(stego_path: str, key: str | bytes) -> CommandResult:
    try:
        secret = SecretKey(key)
        payload = stego.extract(_load(stego_path), secret)
    except InvalidKey as exc:
        return _fail(EXIT_USAGE, str(exc))
    except FormatError as exc:
        return _fail(EXIT_IO, str(exc))
    except stego.CorruptPayload:
        return _fail(EXIT_BADKEY, "corrupt payload (CRC mismatch)")
    except (stego.BadKeyOrNoPayload, stego.TruncatedCarrier):
        return _fail(EXIT_BADKEY, "bad key or no payload")
    return CommandResult(EXIT_OK, payload, "")


def cmd_capacity(cover: str) -> CommandResult:
    try:
        video = _load(cover)
    except FormatError as exc:
        return _fail(EXIT_IO, str(exc))
    return CommandResult(EXIT_OK, f"capacity_bytes={stego.capacity(video)}\n".encode())


def cmd_psnr(a: str, b: str, as_json: bool = False) -> CommandResult:
    try:
        report = lsb_diff_census(_load(a), _load(b))
    except (FormatError, ShapeMismatch) as exc:
        return _fail(EXIT_IO, str(exc))
    text = report.to_json() + "\n" if as_json else report.to_text()
    return CommandResult(EXIT_OK, text.encode())


def cmd_inspect(path: str) -> CommandResult:
    try:
        video = _load(path)
    except FormatError as exc:
        return _fail(EXIT_IO, str(exc))
    m = video.meta
    line = (
        f"width={m.width} height={m.height} colorspace={m.colorspace.name} "
        f"frames={len(video.frames)} bytes_per_frame={m.bytes_per_frame} "
        f"lsb_slots={video.total_samples} capacity_bytes={stego.capacity(video)}\n"
    )
    return CommandResult(EXIT_OK, line.encode())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tristeg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hide", help="embed a message into a cover video")
    p.add_argument("--cover", required=True)
    p.add_argument("--message", default="-", help="message file, '-' for stdin")
    p.add_argument("--out", required=True)
    p.add_argument("--key", help=f"passphrase (prefer ${KEY_ENV} or the prompt)")
    p.add_argument("--format", choices=["auto", "y4m", "ppmdir"], default="auto")

    p = sub.add_parser("reveal", help="recover a message from a stego video")
    p.add_argument("--stego", required=True)
    p.add_argument("--out", default="-", help="output file, '-' for stdout")
    p.add_argument("--key")

    p = sub.add_parser("capacity", help="payload bytes a cover can hold")
    p.add_argument("--cover", required=True)

    p = sub.add_parser("psnr", help="compare two videos sample by sample")
    p.add_argument("--cover", required=True)
    p.add_argument("--stego", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("inspect", help="print container geometry")
    p.add_argument("video")
    return parser


def _resolve_key(args, stderr) -> str | None:
    if args.key is not None:
        stderr.write("warning: --key exposes the passphrase to other users; "
                     f"prefer ${KEY_ENV}\n")
        return args.key
    env = os.environ.get(KEY_ENV)
    if env is not None:
        return env
    try:
        if sys.stdin is not None and sys.stdin.isatty():
            return getpass.getpass("Passphrase: ")
    except (EOFError, OSError):
        pass
    return None


def run(argv: Sequence[str] | None = None, stdin=None, stderr=None) -> CommandResult:
    """Parse ``argv`` and execute one command without touching stdout."""
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command in ("hide", "reveal"):
        key = _resolve_key(args, stderr)
        if not key:
            return _fail(EXIT_USAGE, f"no passphrase: set ${KEY_ENV}, use a terminal, or --key")

    if args.command == "hide":
        try:
            if args.message == "-":
                message = (stdin or sys.stdin.buffer).read()
            else:
                with open(args.message, "rb") as fh:
                    message = fh.read()
        except OSError as exc:
            return _fail(EXIT_IO, f"{args.message}: {exc.strerror or exc}")
        return cmd_hide(args.cover, message, key, args.out, args.format)
    if args.command == "reveal":
        result = cmd_reveal(args.stego, key)
        if result.exit_code == EXIT_OK and args.out != "-":
            try:
                with open(args.out, "wb") as fh:
                    fh.write(result.stdout)
            except OSError as exc:
                return _fail(EXIT_IO, f"{args.out}: {exc.strerror or exc}")
            result.stdout = b""
        return result
    if args.command == "capacity":
        return cmd_capacity(args.cover)
    if args.command == "psnr":
        return cmd_psnr(args.cover, args.stego, args.json)
    return cmd_inspect(args.video)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if result.stderr:
        sys.stderr.write(result.stderr)
    if result.stdout:
        sys.stdout.buffer.write(result.stdout)
        sys.stdout.flush()
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
