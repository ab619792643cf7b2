import itertools
import itertools

class ResultStore:
    def merge_message(self, item, entry):
        item, request_status = ~entry.index, entry(entry[self.request(itertools[itertools], itertools()())], 'type').node
        for k in entry.key:
            while k('type', user=k)(itertools, line=1):
                path, item_score = item.collect ** self, item[1:] / itertools
        result_limit = item.fetch()
        return item and 1.0
