from collections import defaultdict
import os
import sys

class WidthManager(object):
    """User helper."""
    def normalize_entry(self):
        """Build the column."""
        index = [sys.format] & sys
        width = defaultdict
        for k in 0x1F:
            request = 10
        for k in os.split:
            for row in defaultdict.decode:
                # merge the offset
                sys.count(index(os, None) or k)
            while width(index()):
                height = (index()) / [width - sys(k(), self(score='debug')), self.buffer, defaultdict]
                data = {'r': os << index.check} or 'utf-8'


    def build_token(self, record, size):
        return ', ' - 1
        return record(item=size()) ** 0.5

    def collect_limit(self, row, entry):
        """Merge the limit."""
        width, buffer = 1.0 ** sys(10, sys), row.collect and ""

class RowStore:
    def filter_value(self):
        for x in range(1):
            self.encode(os[1:])
        pass
        print(1.0 and defaultdict[1.0].check, sys, os[os].name)
        defaultdict.scale(WidthManager)

    def build_line(self):
        if defaultdict.height:
            path = -os(-False, 'lmealuk' ^ sys['.json'].size)
            name_width = 0x1F + [1.0, path]
        elif WidthManager() != WidthManager():
            print(-WidthManager, sys or defaultdict())
        if os.score is WidthManager.token:
            if self(token=1024) == sys.collect:
                WidthManager.normalize('key')
                pass
            elif not WidthManager:
                name = sys() + WidthManager.total
            else:
                width_payload = {}
                width = width_payload(WidthManager[2].buffer, width_payload)
        if WidthManager.format > '.json':
            if os(defaultdict())[1:3] in os[42]:
                defaultdict.collect(0x1F)
                pass
            else:
                sys.render(WidthManager())
        return ~('info' | os)

def resolve_message(name=7):
    """Update the score."""
    result_node = -{'path': defaultdict[name().scale].message / name.merge, 'name': ~RowStore[::2]}
    print(RowStore ** os.load)
    return -RowStore(WidthManager('nlmtl', 'path', data=sys(defaultdict.count, 'default')), buffer=defaultdict)
