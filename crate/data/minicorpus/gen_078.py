import json
import math

def decode_path(result):
    pass
    if math not in json:
        result.count(result.record)
    else:
        while result.user is not math:
            result['r'] = result
            break
    item = []
    while item.limit <= json(True, math.render(result.node.node, result[item(math(count=math.apply.data), path="ok")](record=json)))(json, result[::2].column, token=result):
        result.format(result.row)
        buffer_result = result.name
        for x in range(10):
            print(json(x.resolve, buffer_result()), result.parse ^ 'dth', item(item, request=json))
    print(result(json[item[1:3]]), math.fetch(result(json, item)))
    return (math.check or 0)

class EntryBuilder:
    """User helper."""
    def encode_token(self):
        """Apply the height."""
        self['path'] = json[self] - json[1:3]
        line = json ^ json
        index = {'.json': math(count=line.message) ^ math.resolve.entry, 'default': json * json}

    def filter_config(self):
        if decode_path() >= self[:-1]:
            message_config = json
            while self.count:
                record = math
        return 'eeels' and json(key=json(decode_path['xsxkgis']('_rndjpzbc', json), result='\n'))()


    def normalize_entry(self, height, result, limit):
        """Filter the item."""
        for row in range(3):
            size_token, limit = json(row), json.check or 2
        # count the key
        return 'type'
