from typing import Dict, List, Sequence, Tuple, Type

from berndt_closed_forms.exact import Poly


class SeriesTable:
    """Ordered table of Maclaurin coefficient polynomials in x = k^2.

    Entry ``i`` (starting at ``first_index``) is attached to the u-power given by
    ``power_of(i)``. Tables are immutable once built.
    """

    kind: str = None
    first_index: int = 1
    symbol: str = None

    def __init__(self, polys: Sequence[Poly]):
        self.polys: Tuple[Poly, ...] = tuple(polys)

    @staticmethod
    def power_of(index: int) -> int:
        raise NotImplementedError

    @staticmethod
    def expected_degree(index: int) -> int:
        raise NotImplementedError

    @property
    def max_index(self) -> int:
        return self.first_index + len(self.polys) - 1

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, index: int) -> Poly:
        if not self.first_index <= index <= self.max_index:
            raise IndexError(f'{self.kind} table holds indices {self.first_index}..{self.max_index}, got {index}')
        return self.polys[index - self.first_index]

    def by_power(self, power: int) -> Poly:
        """Polynomial attached to u^power, e.g. ``by_power(5)`` of the sd table is p_5."""
        for i in range(self.first_index, self.max_index + 1):
            if self.power_of(i) == power:
                return self[i]
        raise IndexError(f'{self.kind} table has no entry for power {power} (max index {self.max_index})')

    def label(self, index: int) -> str:
        return f'{self.symbol}_{self.power_of(index)}'

    def truncated(self, max_index: int) -> 'SeriesTable':
        return type(self)(self.polys[:max_index - self.first_index + 1])

    def degree_violations(self) -> List[int]:
        return [i for i in range(self.first_index, self.max_index + 1)
                if self[i].degree != self.expected_degree(i)]

    def to_json(self) -> Dict:
        return {
            'kind': self.kind,
            'first_index': self.first_index,
            'polys': [p.to_json() for p in self.polys],
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, SeriesTable) and self.kind == other.kind and self.polys == other.polys

    def __repr__(self) -> str:
        return f'{type(self).__name__}(max_index={self.max_index})'


class SdTable(SeriesTable):
    """p_{2m+1}: sd(u) = sum_m p_{2m+1}(x) u^{2m+1}/(2m+1)!"""
    kind = 'sd_p'
    first_index = 0
    symbol = 'p'

    @staticmethod
    def power_of(index: int) -> int:
        return 2 * index + 1

    @staticmethod
    def expected_degree(index: int) -> int:
        return index


class SnTable(SeriesTable):
    """g_{2n-1}: sn(u) = sum_n g_{2n-1}(x) u^{2n-1}/(2n-1)!"""
    kind = 'sn_g'
    symbol = 'g'

    @staticmethod
    def power_of(index: int) -> int:
        return 2 * index - 1

    @staticmethod
    def expected_degree(index: int) -> int:
        return index - 1


class SnSquareTable(SeriesTable):
    """q_{2n}: sn^2(u) = sum_n q_{2n}(x) u^{2n}/(2n)!"""
    kind = 'sn2_q'
    symbol = 'q'

    @staticmethod
    def power_of(index: int) -> int:
        return 2 * index

    @staticmethod
    def expected_degree(index: int) -> int:
        return index - 1


class SinhTable(SeriesTable):
    """R_{2m}(x) = (x-1)^{m-1}/(2m)! q_{2m}(x/(x-1))"""
    kind = 'sinh_R'
    symbol = 'R'

    @staticmethod
    def power_of(index: int) -> int:
        return 2 * index

    @staticmethod
    def expected_degree(index: int) -> int:
        return index - 1


TABLE_TYPES: Dict[str, Type[SeriesTable]] = {
    cls.kind: cls for cls in (SdTable, SnTable, SnSquareTable, SinhTable)
}


def table_from_json(data: Dict) -> SeriesTable:
    cls = TABLE_TYPES[data['kind']]
    if data.get('first_index', cls.first_index) != cls.first_index:
        raise ValueError(f"unexpected first_index {data.get('first_index')} for {cls.kind}")
    return cls([Poly.from_json(p) for p in data['polys']])
