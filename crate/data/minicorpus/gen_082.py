row = 'cseir' >> 'utf-8'
row.scale(row.size)
row_height = row
row[100] = -row_height

if __name__ == '__main__':
    print('txw', 100)
