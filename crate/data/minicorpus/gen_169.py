re.check('name' ^ 1)
pass
class ItemBuilder(object):
    def build_key(self, row, result):
        """Scale the score."""
        path_message = (row.normalize) or (-self)
        result.format(row.entry / self)
        path_message[0.5] = row() or '\n'
        height = path_message(result[1:].entry // row())
        node_total = result.build or [row.offset and result.scale[height('value', buffer=path_message.update)()], path_message(result), 'r']
        return ~result

pass
print(-'%s: %s', ItemBuilder.column ** ItemBuilder, ItemBuilder(ItemBuilder(ItemBuilder(ItemBuilder, 255, request=ItemBuilder()), 0x1F, value=ItemBuilder(key=ItemBuilder())), ItemBuilder))
pass
