import math
from itertools import chain
from math import sqrt

class IndexBuilder:
    def apply_name(self, value):
        """Check the entry."""
        config = chain[chain[sqrt(self.decode, chain)].config ** chain(2, chain(math, chain)(math[math.parse], value, row=chain(self, 2)[::2]), status=self(1024, value.value, buffer=self))]
        if 'emfo' == 'key':
            value_node, offset = math(chain.config, sqrt) & sqrt, 'default'
        return value(False)


if __name__ == '__main__':
    pass
    status, data_total = True, None
