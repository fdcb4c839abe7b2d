"""Reduction receipts: enough data to map optimum values along a reduction.

Every reduction returns, besides the transformed instance, a receipt that
records its parameters and renaming maps. Receipts support two things:

* value transport: `forward` maps an optimum (or threshold) of the input
  instance to the corresponding value for the output instance, `backward`
  inverts it (recovery);
* serialization to a plain "key = value" sidecar text format, so a pipeline
  run can be audited without re-running it.

All integers are arbitrary-precision; the chains produce values way past
2**64 even for toy inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ReceiptError(ValueError):
    """Malformed receipt or a value outside the receipt's range."""


@dataclass
class ReductionReceipt:
    """One reduction stage. `params` values are ints, strings or int tuples."""

    kind: str
    params: dict[str, object] = field(default_factory=dict)
    maps: dict[str, dict[str, str]] = field(default_factory=dict)

    # -- typed access -------------------------------------------------------

    def int_param(self, key: str) -> int:
        v = self.params.get(key)
        if not isinstance(v, int):
            raise ReceiptError(f"receipt {self.kind}: missing int param {key!r}")
        return v

    def list_param(self, key: str) -> tuple[int, ...]:
        v = self.params.get(key)
        if not isinstance(v, tuple):
            raise ReceiptError(f"receipt {self.kind}: missing list param {key!r}")
        return v

    # -- value transport ----------------------------------------------------

    def forward(self, value: int) -> int:
        """Optimum of the input instance -> optimum of the output instance."""
        if self.kind == "anchored_to_fa6":
            crgj = self.int_param("crgj_fplus")
            big_t = self.int_param("big_t")
            w_sum = sum(self.list_param("w_list"))
            return crgj + w_sum * big_t**2 + value
        if self.kind == "fa_to_surface":
            p = self.int_param("p")
            gt = self._sum_git()
            return value * p * p + gt + (p * p) // 2
        if self.kind == "three_connectify":
            return 9 * value
        if self.kind == "expand_weights":
            return value
        raise ReceiptError(f"unknown receipt kind {self.kind!r}")

    def backward(self, value: int) -> int:
        """Inverse of forward; floors where the chain maps intervals."""
        if self.kind == "anchored_to_fa6":
            crgj = self.int_param("crgj_fplus")
            big_t = self.int_param("big_t")
            w_sum = sum(self.list_param("w_list"))
            base = crgj + w_sum * big_t**2
            if value < base:
                raise ReceiptError(
                    f"value {value} below the fixed part {base} of this receipt"
                )
            return value - base
        if self.kind == "fa_to_surface":
            p = self.int_param("p")
            gt = self._sum_git()
            if value < gt:
                raise ReceiptError(
                    f"value {value} below the gadget term {gt}; not a chain value"
                )
            return (value - gt) // (p * p)
        if self.kind == "three_connectify":
            return value // 9
        if self.kind == "expand_weights":
            return value
        raise ReceiptError(f"unknown receipt kind {self.kind!r}")

    def _sum_git(self) -> int:
        g_list = self.list_param("g_list")
        t_list = self.list_param("t_list")
        if len(g_list) != len(t_list):
            raise ReceiptError("g_list and t_list lengths differ")
        return sum(g * t for g, t in zip(g_list, t_list))

    def validate(self) -> None:
        """Recompute the derived parameters and insist they match."""
        if self.kind == "fa_to_surface":
            m = self.int_param("m")
            p = self.int_param("p")
            t = self.int_param("t")
            h = self.int_param("h")
            if p != 8 * m:
                raise ReceiptError(f"p = {p} but 8m = {8 * m}")
            if t != (m + 1) * p * p:
                raise ReceiptError(f"t = {t} but (m+1)p^2 = {(m + 1) * p * p}")
            g_list = self.list_param("g_list")
            t_list = self.list_param("t_list")
            if len(g_list) != h or len(t_list) != h:
                raise ReceiptError("g_list/t_list length must equal h")
            for i in range(1, h + 1):
                if g_list[i - 1] != 5 + i:
                    raise ReceiptError(f"g_{i} = {g_list[i - 1]}, expected {5 + i}")
                if t_list[i - 1] != (h + 1 - i) * t:
                    raise ReceiptError(
                        f"t_{i} = {t_list[i - 1]}, expected {(h + 1 - i) * t}"
                    )
        elif self.kind == "anchored_to_fa6":
            if len(self.list_param("w_list")) != 4:
                raise ReceiptError("w_list must have four entries")
            self.int_param("k")
            self.int_param("big_t")
            self.int_param("crgj_fplus")
        elif self.kind == "three_connectify":
            if self.int_param("scale") != 9:
                raise ReceiptError("three_connectify scale must be 9")
        elif self.kind == "expand_weights":
            self.int_param("preserve_simple_3conn")
        else:
            raise ReceiptError(f"unknown receipt kind {self.kind!r}")


@dataclass
class CompositeReceipt:
    """An ordered chain of stage receipts; forward composes left to right."""

    stages: tuple[ReductionReceipt, ...]

    def forward(self, value: int) -> int:
        for st in self.stages:
            value = st.forward(value)
        return value

    def backward(self, value: int) -> int:
        for st in reversed(self.stages):
            value = st.backward(value)
        return value

    def validate(self) -> None:
        for st in self.stages:
            st.validate()

    def stage_of_kind(self, kind: str) -> ReductionReceipt:
        for st in self.stages:
            if st.kind == kind:
                return st
        raise ReceiptError(f"no stage of kind {kind!r} in composite receipt")


def target_value(receipt: ReductionReceipt | CompositeReceipt, s: int) -> int:
    """Threshold for the output instance corresponding to source optimum s."""
    if s < 0:
        raise ReceiptError("source value must be non-negative")
    return receipt.forward(s)


def recover_s(value: int, receipt: ReductionReceipt | CompositeReceipt) -> int:
    """Source optimum recovered from an output-instance value."""
    if value < 0:
        raise ReceiptError("output value must be non-negative")
    return receipt.backward(value)


# ---------------------------------------------------------------------------
# sidecar text format


def _format_value(v: object) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        if any(ch.isspace() for ch in v) or "=" in v:
            raise ReceiptError(f"string param {v!r} not representable")
        return v
    if isinstance(v, tuple):
        return " ".join(str(x) for x in v)
    raise ReceiptError(f"unsupported param type {type(v).__name__}")


def _receipt_lines(r: ReductionReceipt, prefix: str = "") -> list[str]:
    lines = [f"{prefix}kind = {r.kind}"]
    for key in r.params:
        lines.append(f"{prefix}{key} = {_format_value(r.params[key])}")
    for map_name in r.maps:
        m = r.maps[map_name]
        for k in m:
            lines.append(f"{prefix}map.{map_name}.{k} = {m[k]}")
    return lines


def receipt_to_text(r: ReductionReceipt | CompositeReceipt) -> str:
    if isinstance(r, ReductionReceipt):
        return "\n".join(_receipt_lines(r)) + "\n"
    lines = ["kind = composite", f"stages = {len(r.stages)}"]
    for i, st in enumerate(r.stages):
        lines.extend(_receipt_lines(st, prefix=f"stage{i}."))
    return "\n".join(lines) + "\n"


_INT_LIST_KEYS = {"w_list", "t_list", "g_list"}


def _parse_value(key: str, raw: str) -> object:
    raw = raw.strip()
    if key in _INT_LIST_KEYS:
        return tuple(int(tok) for tok in raw.split()) if raw else ()
    if raw and (raw.isdigit() or (raw[0] == "-" and raw[1:].isdigit())):
        return int(raw)
    return raw


def _assign(r: ReductionReceipt, key: str, raw: str) -> None:
    if key == "kind":
        r.kind = raw.strip()
    elif key.startswith("map."):
        _, map_name, entry = key.split(".", 2)
        r.maps.setdefault(map_name, {})[entry] = raw.strip()
    else:
        r.params[key] = _parse_value(key, raw)


def receipt_from_text(text: str) -> ReductionReceipt | CompositeReceipt:
    entries: list[tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ReceiptError(f"line {lineno}: expected 'key = value'")
        key, _, raw = stripped.partition("=")
        entries.append((key.strip(), raw))

    kinds = dict(entries)
    if kinds.get("kind", "").strip() == "composite":
        n = int(kinds.get("stages", "0"))
        stages = [ReductionReceipt(kind="") for _ in range(n)]
        for key, raw in entries:
            if key in ("kind", "stages"):
                continue
            if not key.startswith("stage"):
                raise ReceiptError(f"unexpected key {key!r} in composite receipt")
            idx_str, _, rest = key[len("stage"):].partition(".")
            idx = int(idx_str)
            if not (0 <= idx < n):
                raise ReceiptError(f"stage index {idx} out of range")
            _assign(stages[idx], rest, raw)
        out = CompositeReceipt(tuple(stages))
        out.validate()
        return out

    r = ReductionReceipt(kind="")
    for key, raw in entries:
        _assign(r, key, raw)
    if not r.kind:
        raise ReceiptError("receipt text has no kind")
    r.validate()
    return r
