"""Union-find over the integers 0..count-1, used for block merging"""
from typing import List


class DisjointSet:
    """Disjoint-set forest with path compression and union by rank"""

    def __init__(self, count: int):
        self.parent = list(range(count))
        self.rank = [0] * count
        self.groups = count

    def find(self, element: int) -> int:
        """Return the representative of the group holding `element`"""
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        """
        Merge the groups of two elements.

        Returns:
            False if both elements already shared a group
        """
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False

        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
            self.parent[rep_second] = rep_first
        elif self.rank[rep_first] > self.rank[rep_second]:
            self.parent[rep_second] = rep_first
        else:
            self.parent[rep_first] = rep_second

        self.groups -= 1
        return True

    def __len__(self) -> int:
        return self.groups

    def to_list(self) -> List[List[int]]:
        """Groups in order of their smallest element, each sorted ascending"""
        result: List[List[int]] = [[] for _ in self.parent]
        for i in range(len(self.parent)):
            result[self.find(i)].append(i)
        return sorted((group for group in result if group), key=lambda g: g[0])
